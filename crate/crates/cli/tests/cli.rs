use std::io::Write;
use std::process::{Command, Output, Stdio};

fn quartered(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartered")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quartered"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_aztec_diamond() {
    let o = quartered(&["gen", "ad", "--n", "8"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["cells"].as_array().unwrap().len(), 144);
}

#[test]
fn gen_pinwheel_quarter_with_ascii() {
    let o = quartered(&["gen", "r", "--n", "3", "--ascii"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let (first, picture) = text.split_once('\n').unwrap();
    let region: serde_json::Value = serde_json::from_str(first).unwrap();
    assert_eq!(region["cells"].as_array().unwrap().len(), 6);
    assert_eq!(picture, ".##\n###\n..#\n");
}

#[test]
fn gen_holey_rectangle() {
    let o = quartered(&["gen", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,3,5"]);
    assert!(o.status.success());
    let g = json(&o);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 36);
    assert!(g["edges"].as_array().unwrap().iter().all(|e| e.as_array().unwrap().len() == 2));
}

#[test]
fn gen_rejects_bad_parameters() {
    for args in [
        &["gen", "ad"][..],
        &["gen", "ar", "--n", "3"],
        &["gen", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,1,5"],
        &["gen", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,3,9"],
        &["gen", "ad", "--n", "0"],
    ] {
        let o = quartered(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn count_examples() {
    for (args, want) in [
        (&["count", "--family", "r", "--n", "8"][..], "80\n"),
        (&["count", "--family", "ad", "--n", "4", "--engine", "fkt"], "1024\n"),
        (&["count", "--family", "kna", "--n", "6"], "6\n"),
        (&["count", "--family", "ad", "--n", "3", "--engine", "brute", "--crosscheck"], "64\n"),
        (&["count", "--family", "ar_bar", "--m", "3", "--n", "5", "--remove", "3,4,6"], "24\n"),
    ] {
        let o = quartered(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), want, "{args:?}");
    }
}

#[test]
fn count_reads_json_from_stdin() {
    let square = r#"{"vertices":[[0,0],[0,1],[1,0],[1,1]],"edges":[[0,1],[0,2],[1,3],[2,3]]}"#;
    let o = with_stdin(&["count", "--input", "-"], square);
    assert_eq!(stdout(&o), "2\n");
    let region = stdout(&quartered(&["gen", "ka", "--n", "7"]));
    assert_eq!(stdout(&with_stdin(&["count", "--input", "-", "--crosscheck"], &region)), "140\n");
}

#[test]
fn count_input_errors_exit_2() {
    assert_eq!(with_stdin(&["count", "--input", "-"], "{").status.code(), Some(2));
    assert_eq!(quartered(&["count"]).status.code(), Some(2));
    assert_eq!(quartered(&["count", "--family", "ad", "--n", "6", "--engine", "brute"]).status.code(), Some(2));
    assert_eq!(quartered(&["count", "--family", "r", "--n", "3", "--engine", "magic"]).status.code(), Some(2));
}

#[test]
fn verify_theorem1_to_twelve() {
    let o = quartered(&["verify", "theorem1", "--max-order", "12"]);
    assert!(o.status.success());
    let report = json(&o);
    assert_eq!(report["suite"], "theorem1");
    assert_eq!(report["ok"], true);
    assert_eq!(report["cases"].as_array().unwrap().len(), 36);
}

#[test]
fn verify_small_suites() {
    for args in [&["verify", "lemma6", "--max-n", "30"][..], &["verify", "lemma2", "--max-n", "2"]] {
        let o = quartered(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(json(&o)["ok"], true);
    }
    let csv = stdout(&quartered(&["verify", "lemma1", "--format", "csv"]));
    assert!(csv.starts_with("suite,case,expected,actual,ok\n"));
    assert_eq!(csv.lines().count(), 9);
    assert_eq!(quartered(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn bench_emits_csv() {
    let o = quartered(&["bench", "--set", "aztec,grid", "--engines", "dp,fkt,brute", "--reps", "1", "--samples", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,engine,vertices,ms,result_digits"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 5));
    assert!(rows.iter().any(|r| r[0] == "AD(8)" && r[1] == "fkt"));
    assert!(rows.iter().any(|r| r[0] == "grid6#4" && r[1] == "brute"));
    let o = quartered(&["bench", "--min-order", "4", "--max-order", "6", "--reps", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn render_is_deterministic() {
    let region = stdout(&quartered(&["gen", "r", "--n", "8"]));
    let svg = with_stdin(&["render", "--input", "-", "--format", "svg"], &region);
    assert!(svg.status.success());
    assert_eq!(svg.stdout, with_stdin(&["render", "--input", "-", "--format", "svg"], &region).stdout);
    assert!(stdout(&svg).starts_with("<svg"));
    let ascii = quartered(&["render", "--family", "ar_holey", "--m", "3", "--n", "5", "--keep", "1,3,5"]);
    assert!(stdout(&ascii).contains('o'));
    assert_eq!(with_stdin(&["render", "--input", "-"], "[1,2]").status.code(), Some(2));
}
