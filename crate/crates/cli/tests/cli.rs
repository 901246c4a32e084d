use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_squarelab"));
    c.env_remove("SQUARELAB_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn gen_dk_writes_file() {
    let path = tmp("d3.txt");
    let o = run(&["gen", "dk", "--k", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 225);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn gen_output_round_trips() {
    for args in [
        vec!["gen", "dk", "--k", "2"],
        vec!["gen", "an", "--p", "2"],
        vec!["gen", "vertex-example", "--k", "2"],
    ] {
        let first = stdout(&run(&args));
        let path = tmp(&format!("{}.txt", args[1]));
        std::fs::write(&path, &first).unwrap();
        // re-emit through a command that parses and echoes the set size
        let kind = if args[1] == "vertex-example" { "vertices" } else { "centers1d" };
        let o = run(&["find", kind, "--in", path.to_str().unwrap(), "--count", "--format", "json"]);
        assert_eq!(code(&o), 0, "{o:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["input_size"].as_u64().unwrap() as usize, first.lines().count());
        // canonical ordering: regenerating gives identical bytes
        assert_eq!(first, stdout(&run(&args)));
    }
}

#[test]
fn side_file_for_centers() {
    let centers = tmp("s2.txt");
    let o = run(&["gen", "boundary-example", "--k", "2", "--centers", centers.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&centers).unwrap().lines().count(), 225);
}

#[test]
fn verify_dk_passes() {
    let o = run(&["verify", "dk", "--k", "4"]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert!(stdout(&o).starts_with("dk_property ok"));
}

#[test]
fn verify_json_report_layout() {
    let o = run(&["verify", "an", "--p", "2", "--format", "json", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "verify_an");
    assert_eq!(v["seed"], 7);
    for check in v["checks"].as_array().unwrap() {
        for key in ["name", "lhs", "rhs", "ok", "sizes"] {
            assert!(check.get(key).is_some());
        }
    }
}

#[test]
fn scan_csv_has_slope_column() {
    let o = run(&["scan", "--family", "dk_vertex", "--kmin", "2", "--kmax", "6", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,B,S,slope,target"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn failed_check_exits_one() {
    // the k=5..6 size slope is about 3.59, outside 3 ± 0.3
    let o = run(&["scan", "--family", "dk_size", "--kmin", "2", "--kmax", "6", "--band", "0.3"]);
    assert_eq!(code(&o), 1);
    let o = run(&["scan", "--family", "dk_size", "--kmin", "2", "--kmax", "6", "--band", "1.0"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["bogus"])), 2);
    assert_eq!(code(&run(&["gen", "dk"])), 2);
    assert_eq!(code(&run(&["gen", "dk", "--k", "1"])), 2);
    assert_eq!(code(&run(&["ratios", "--s", "3/1", "--jmax", "5"])), 2);
    assert_eq!(code(&run(&["gen", "cantor", "--s", "3/2", "--p", "2", "--mode", "exact"])), 2);
    assert_eq!(code(&run(&["gen", "dk", "--k", "2", "--jobs", "0"])), 2);
}

#[test]
fn parse_error_names_path_and_line() {
    let path = tmp("bad.txt");
    std::fs::write(&path, "# header\n1\n2 3\n").unwrap();
    let o = run(&["cover", "--in", path.to_str().unwrap(), "--len", "2"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.txt:3"), "{err}");
    let o = run(&["cover", "--in", tmp("missing.txt").to_str().unwrap(), "--len", "2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("missing.txt"));
}

#[test]
fn budget_env_controls_guards() {
    let o = bin().args(["gen", "dk", "--k", "2"]).env("SQUARELAB_BUDGET", "zero").output().unwrap();
    assert_eq!(code(&o), 2);
    let o = bin().args(["gen", "dk", "--k", "2"]).env("SQUARELAB_BUDGET", "4").output().unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn results_independent_of_jobs() {
    let path = tmp("d4.txt");
    run(&["gen", "dk", "--k", "4", "--out", path.to_str().unwrap()]);
    let one = run(&["--jobs", "1", "find", "centers1d", "--in", path.to_str().unwrap()]);
    let four = run(&["--jobs", "4", "find", "centers1d", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn csv_outputs_have_headers() {
    let path = tmp("d2.txt");
    run(&["gen", "dk", "--k", "2", "--out", path.to_str().unwrap()]);
    let o = run(&["cover", "--in", path.to_str().unwrap(), "--len", "4", "--format", "csv"]);
    assert!(stdout(&o).starts_with("length,count\n"));
    let o = run(&["ratios", "--s", "2/1", "--jmax", "12", "--which", "upper", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("j,ratio,target\n"));
    let last: Vec<&str> = text.lines().last().unwrap().split(',').collect();
    let r: f64 = last[1].parse().unwrap();
    assert!((1.0..=1.25).contains(&r));
    let pts = tmp("pts.txt");
    std::fs::write(&pts, "0 0\n1 1\n3 3\n").unwrap();
    let o = run(&["boxcount", "--in", pts.to_str().unwrap(), "--m", "-1,-2", "--format", "csv"]);
    assert_eq!(stdout(&o), "scale,count\n-1,2\n-2,1\n");
}

#[test]
fn find_boundaries_lists_rings() {
    let path = tmp("ring.txt");
    let ring: String = [(-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1)]
        .iter()
        .map(|(x, y)| format!("{x} {y}\n"))
        .collect();
    std::fs::write(&path, ring).unwrap();
    let o = run(&["find", "boundaries", "--in", path.to_str().unwrap(), "--rmax", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0 0 2\n");
}

#[test]
fn splice_and_countable_generate() {
    let o = run(&["gen", "splice", "--a", "0,1,3", "--n", "2", "--level", "0", "--level", "1,3"]);
    assert_eq!(stdout(&o), "# depth 3\n1\n3\n");
    let o = run(&["gen", "splice", "--n", "2"]);
    assert_eq!(code(&o), 0);
    // default a = 0, 3, 15 with full levels
    assert_eq!(stdout(&o).lines().count(), 1 + (1 << 15));
    let o = run(&["gen", "countable", "--alpha", "1", "--blocks", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# frame_bits 4\n"));
    let o = run(&["verify", "countable", "--alpha", "1", "--blocks", "2"]);
    assert_eq!(code(&o), 0);
}
