use std::path::Path;
use std::process::{Command, Output};

fn prism(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prism"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = prism(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn schubert_goldens() {
    assert_eq!(stdout(&["schubert", "2143"]), golden("schubert_2143.txt"));
    assert_eq!(stdout(&["schubert", "1234"]), "1\n");
    assert_eq!(
        stdout(&["schubert", "42513", "--model", "prism", "--check"]),
        golden("schubert_42513_check.txt")
    );
}

#[test]
fn models_agree() {
    let a = stdout(&["schubert", "35142"]);
    assert_eq!(stdout(&["schubert", "35142", "--model", "prism"]), a);
    assert_eq!(stdout(&["schubert", "35142", "--model", "pipedreams"]), a);
}

#[test]
fn enumerate_goldens() {
    for (kind, w) in [
        ("prism", "1432"),
        ("prism", "42513"),
        ("prism", "246135"),
        ("prism", "1234"),
        ("pipedreams", "1423"),
        ("pipedreams", "2413"),
        ("multiplus", "2413"),
        ("intplus", "2143"),
    ] {
        let got = stdout(&["enumerate", kind, w]);
        assert_eq!(
            got,
            golden(&format!("enumerate_{kind}_{w}.txt")),
            "{kind} {w}"
        );
    }
    assert_eq!(
        stdout(&["--format", "json", "enumerate", "pipedreams", "2413"]),
        golden("enumerate_pipedreams_2413.json")
    );
}

#[test]
fn enumerate_headers_carry_counts() {
    assert!(stdout(&["enumerate", "prism", "246135"]).starts_with("# prism 246135: 8\n"));
    assert!(stdout(&["enumerate", "pipedreams", "1423"]).starts_with("# pipedreams 1423: 3\n"));
    assert!(stdout(&["enumerate", "prism", "1234"]).starts_with("# prism 1234: 1\n"));
}

#[test]
fn table_golden() {
    let mut lines = String::new();
    for line in golden("table1.txt").lines() {
        let w = line.split(" | ").next().unwrap();
        let count = stdout(&["enumerate", "prism", w])
            .lines()
            .next()
            .unwrap()
            .rsplit(": ")
            .next()
            .unwrap()
            .to_string();
        let poly = stdout(&["schubert", w, "--model", "prism", "--check"]);
        let mut parts = poly.lines();
        let p = parts.next().unwrap();
        assert!(parts.next().unwrap().starts_with("check: OK"), "{w}");
        lines.push_str(&format!("{w} | {count} | {p}\n"));
    }
    assert_eq!(lines, golden("table1.txt"));
    assert_eq!(lines.lines().count(), 24);
}

#[test]
fn verify_suites() {
    assert_eq!(
        stdout(&["verify", "table1"]),
        "table1 n=4: 24/24 cases pass\n"
    );
    assert_eq!(
        stdout(&["verify", "theorem", "--n", "5"]),
        "theorem n=5: 120/120 cases pass\n"
    );
    assert_eq!(
        stdout(&["verify", "conjecture", "--n", "4"]),
        "conjecture n=4: 24/24 cases pass\n"
    );
    for (suite, cases) in [("lattice", 24), ("stable", 72), ("chute-overlay", 24)] {
        assert_eq!(
            stdout(&["verify", suite, "--n", "4", "--jobs", "2"]),
            format!("{suite} n=4: {cases}/{cases} cases pass\n")
        );
    }
}

#[test]
fn verify_is_byte_stable() {
    let args = ["--format", "json", "verify", "lattice", "--n", "4"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn reports_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let p = path.to_str().unwrap();
    stdout(&["verify", "theorem", "--n", "3", "--report", p]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checked"], 6);

    stdout(&["verify", "conjecture", "--n", "4", "--report", p]);
    let body = std::fs::read_to_string(&path).unwrap();
    let records: Vec<serde_json::Value> = body
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 24);
    assert!(records
        .iter()
        .all(|r| r["conjecture_holds"] == true && r["kmove_connected"] == true));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(prism(&["schubert", "1x3"]).status.code(), Some(2));
    assert_eq!(prism(&["schubert", "1124"]).status.code(), Some(2));
    assert_eq!(prism(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(
        prism(&["verify", "theorem", "--n", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        prism(&["verify", "theorem", "--n", "7", "--long"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(prism(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        prism(&["enumerate", "widgets", "123"]).status.code(),
        Some(2)
    );
}

#[test]
fn long_flag_raises_the_ceiling() {
    assert_eq!(
        stdout(&["--long", "verify", "theorem", "--n", "6"]),
        "theorem n=6: 720/720 cases pass\n"
    );
}
