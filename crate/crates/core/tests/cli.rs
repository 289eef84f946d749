use std::process::{Command, Output};

fn varistar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varistar")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn disc_text_lists_four_discs() {
    let out = varistar(&["disc", "--p", "0.5", "--w0", "-0.4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("exact: center = 2.1 + 0i, radius = 0.4"), "{text}");
    assert!(text.contains("theorem2: center = 2 + 0i, radius = 0.5"), "{text}");
}

#[test]
fn disc_csv_has_header_and_rows() {
    let out = varistar(&["disc", "--p", "0.5", "--w0", "-0.6666666666666666", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rows.headers().unwrap(), vec!["disc", "center_re", "center_im", "radius"]);
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 4);
    let exact = records.iter().find(|r| &r[0] == "exact").unwrap();
    assert!((exact[1].parse::<f64>().unwrap() - 2.0).abs() < 1e-12);
    assert!((exact[3].parse::<f64>().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["verify", "region", "--p", "0.3", "--samples", "3000", "--seed", "11", "--format", "csv"];
    let first = varistar(&args);
    let second = varistar(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).starts_with("seed,n,violations,max_excess,sup_attained\n11,3000,0,"));
}

#[test]
fn sweep_json_points_sit_on_the_circle() {
    let out = varistar(&["sweep", "--p", "0.5", "--w0", "-0.4", "--k", "16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let text = value.to_string();
    let dists: Vec<f64> = collect_field(&value, "dist_to_center");
    assert_eq!(dists.len(), 16, "{text}");
    assert!(dists.iter().all(|d| (d - 0.4).abs() < 1e-9));
}

fn collect_field(value: &serde_json::Value, key: &str) -> Vec<f64> {
    match value {
        serde_json::Value::Object(map) => map
            .iter()
            .flat_map(|(k, v)| if k == key { v.as_f64().into_iter().collect() } else { collect_field(v, key) })
            .collect(),
        serde_json::Value::Array(items) => items.iter().flat_map(|v| collect_field(v, key)).collect(),
        _ => Vec::new(),
    }
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    assert_eq!(varistar(&["disc", "--p", "1.5", "--w0", "-0.4"]).status.code(), Some(2));
    assert_eq!(varistar(&["disc", "--p", "0.5", "--w0", "-3"]).status.code(), Some(2));
    assert_eq!(varistar(&["a2", "--p", "0.5", "--c1", "0.5", "--c2", "0.9"]).status.code(), Some(2));
    assert_eq!(varistar(&["bogus"]).status.code(), Some(2));
}

#[test]
fn plot_writes_svg() {
    let path = std::env::temp_dir().join(format!("varistar-cli-{}.svg", std::process::id()));
    let out = varistar(&["plot", "--p", "0.5", "--w0", "-0.4", "--samples", "200", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
}
