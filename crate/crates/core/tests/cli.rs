use std::process::Command;

use kmersenne::cli::parse_record;
use kmersenne::FamilyTag;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kmersenne"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn table_rows() {
    let (code, text, _) = run(&["table", "1"]);
    assert_eq!(code, 0);
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["5", "31", "21", "9", "3", "1"]));
    let (_, text, _) = run(&["table", "3"]);
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()
            == ["0", "-i/2", "-1/4", "i/8", "1/16", "-i/32"]));
    let (_, text, _) = run(&["table", "2"]);
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()
            == ["4", "27x^3-12x", "9x^2", "3x", "1", "0"]));
}

#[test]
fn table_is_byte_stable() {
    for id in ["1", "2", "3", "4"] {
        for fmt in ["plain", "csv", "json"] {
            assert_eq!(
                run(&["table", id, "--format", fmt]),
                run(&["table", id, "--format", fmt])
            );
        }
    }
}

#[test]
fn usage_errors() {
    for args in [
        &["table", "5"][..],
        &["table", "1", "--n-max", "0"],
        &["seq", "Q", "3"],
        &["seq", "M", "3", "--k", "0"],
        &["verify", "nonsense"],
        &["verify", "docagne", "--n-max", "0"],
        &["verify", "catalan", "--family", "M"],
        &["series", "MP", "4"],
        &["series", "M", "0"],
        &["bench"],
        &["--format", "xml", "seq", "M", "1"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_passes() {
    let (code, text, _) = run(&["verify", "cassini", "--family", "M", "--n-max", "256"]);
    assert_eq!((code, text.as_str()), (0, "cassini: 256/256 pass\n"));
    let (code, text, _) = run(&["verify", "all", "--n-max", "8", "--k-max", "3"]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn seq_and_json_roundtrip() {
    assert_eq!(run(&["seq", "GM", "4"]).1, "15+7i\n");
    let (code, text, _) = run(&["--format", "json", "seq", "GMP", "5", "--k", "2"]);
    assert_eq!(code, 0);
    let (family, term) = parse_record(&text).unwrap().to_term().unwrap();
    assert_eq!(family, FamilyTag::GMP);
    assert_eq!(term, FamilyTag::GMP.term(5, 2).unwrap());
    let (_, text, _) = run(&["seq", "M", "4", "--range", "--format", "csv"]);
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.lines().last(), Some("M,4,1,15"));
}

#[test]
fn series_and_bench() {
    assert_eq!(
        run(&["series", "M", "6"]),
        (0, "0 1 3 7 15 31 (match)\n".into(), String::new())
    );
    let (code, text, _) = run(&["bench", "0", "1000", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(text.contains("\n1000,1000,"));
    let (code, text, _) = run(&["bench", "1000000"]);
    assert_eq!(code, 0);
    assert!(text.contains("skipped"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("kmersenne-cli-{}.txt", std::process::id()));
    let (code, stdout, _) = run(&["table", "1", "--out", path.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, run(&["table", "1"]).1);
}
