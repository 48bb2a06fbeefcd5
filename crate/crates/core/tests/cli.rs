use std::process::Command;

use strip_divisions::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("strip-divisions").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn counts() {
    assert_eq!(call(&["count", "--lattice", "hex", "-n", "6", "-k", "4"]).1, "28\n");
    assert_eq!(call(&["count", "--lattice", "hex", "-n", "1", "-k", "1"]).1, "1\n");
    assert_eq!(call(&["count", "--lattice", "bar", "-n", "6"]).1, "17316\n");
    for method in ["oracle", "recurrence", "genfunc", "transfer", "all"] {
        let (code, out, _) = call(&["count", "--lattice", "bar", "-n", "5", "-k", "5", "--method", method]);
        assert_eq!((code, out.as_str()), (0, "831\n"), "{method}");
    }
    assert_eq!(call(&["count", "--lattice", "hex", "-n", "9", "--method", "closed-form"]).1, "1597\n");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["count", "--lattice", "bar", "-n", "3", "--method", "closed-form"]).0, 2);
    assert_eq!(call(&["count", "--lattice", "hex", "-n", "15", "--method", "oracle"]).0, 3);
    assert_eq!(call(&["enumerate", "--lattice", "bar", "-n", "8"]).0, 3);
    assert_eq!(call(&["enumerate", "--lattice", "bar", "-n", "3", "--oracle-limit", "4"]).0, 3);
    let (code, _, err) = call(&["table", "--lattice", "hex", "--n-max", "8", "--method", "all", "--inject-fault", "closed-form"]);
    assert_eq!(code, 4);
    assert!(err.contains("closed-form=") && err.contains("oracle="), "{err}");
    assert_eq!(call(&["count", "--lattice", "hex"]).0, 2);
    assert_eq!(call(&["verify", "--suite", "lemmas", "--n-max", "10"]).0, 0);
}

#[test]
fn method_all_skips_oracle_beyond_limit() {
    let (code, out, _) = call(&["count", "--lattice", "bar", "-n", "30", "--method", "all"]);
    assert_eq!(code, 0);
    assert!(out.trim().len() > 20);
}

#[test]
fn tables() {
    let (_, csv, _) = call(&["table", "--lattice", "bar", "--n-max", "5", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,k,count");
    assert_eq!(lines.len() - 1, 30);
    assert_eq!(*lines.last().unwrap(), "5,10,1");
    assert_eq!(call(&["table", "--lattice", "hex", "--n-max", "1", "--format", "csv"]).1, "n,k,count\n1,1,1\n");
    let (_, text, _) = call(&["table", "--lattice", "hex", "--n-max", "6"]);
    assert_eq!(text.lines().last(), Some("6: 1 15 35 28 9 1"));
    let (_, bfile, _) = call(&["table", "--lattice", "hex", "--n-max", "3", "--format", "bfile"]);
    assert_eq!(bfile, "# family=hex n_max=3\n1 1\n2 1\n3 1\n4 1\n5 3\n6 1\n");
    let (_, json, _) = call(&["table", "--lattice", "bar", "--n-max", "2", "--format", "json"]);
    assert_eq!(json, "[\n  [1, 1],\n  [1, 6, 4, 1]\n]\n");
}

#[test]
fn enumerate_listing() {
    let (_, out, _) = call(&["enumerate", "--lattice", "hex", "-n", "4"]);
    let divisions: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(divisions.len(), 13);
    assert!(divisions.contains(&"13,24"));
    assert!(!divisions.contains(&"14,23"));
    assert!(out.contains("# k=2 count=6\n") && out.ends_with("# total=13\n"));

    let (_, out, _) = call(&["enumerate", "--lattice", "bar", "-n", "1"]);
    let divisions: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(divisions, ["12", "1,2"]);
    let (_, out, _) = call(&["enumerate", "--lattice", "bar", "-n", "2"]);
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 12);
}

#[test]
fn verify_reports() {
    let (code, out, _) = call(&["verify", "--suite", "oracle", "--n-max", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("family=hex method=closed-form n<=12"));
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    let (code, out, _) = call(&["verify", "--suite", "identities", "--n-max", "30"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS gluing-identity") && out.contains("PASS binomial-fibonacci-sum"));
}

#[test]
fn expected_parts_and_gf() {
    let (_, out, _) = call(&["expected-parts", "--lattice", "hex", "--n-max", "3"]);
    assert!(out.lines().any(|l| l.starts_with("2 1.5000000000 3/2 ")));
    let (_, out, _) = call(&["expected-parts", "--lattice", "bar", "--n-max", "60", "--precision", "7"]);
    let last: Vec<&str> = out.lines().last().unwrap().split(' ').collect();
    assert_eq!(last[3], "0.8675444");
    assert_eq!(call(&["gf", "--lattice", "hex", "--n-max", "3"]).1, "1: 1\n2: 1 1\n3: 1 3 1\n");
    assert_eq!(call(&["table", "--lattice", "hex", "--n-max", "3", "--emit", "gf"]).1, "1: 1\n2: 1 1\n3: 1 3 1\n");
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let plain = call(&["table", "--lattice", "bar", "--n-max", "12", "--format", "bfile"]);
    let first = call(&["table", "--lattice", "bar", "--n-max", "12", "--format", "bfile", "--cache-dir", path]);
    assert!(dir.path().join("bar-n12.csv").exists());
    let second = call(&["table", "--lattice", "bar", "--n-max", "12", "--format", "bfile", "--cache-dir", path]);
    assert_eq!(plain, first);
    assert_eq!(first, second);

    std::fs::write(dir.path().join("hex-n3.csv"), "garbage").unwrap();
    let (code, _, err) = call(&["table", "--lattice", "hex", "--n-max", "3", "--cache-dir", path]);
    assert_eq!(code, 1);
    assert!(err.contains("hex-n3.csv"), "{err}");
}

#[test]
fn binary_reads_cache_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_strip-divisions"))
        .args(["table", "--lattice", "hex", "--n-max", "5", "--format", "csv"])
        .env(strip_divisions::cli::CACHE_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let cached = std::fs::read_to_string(dir.path().join("hex-n5.csv")).unwrap();
    assert_eq!(cached.as_bytes(), out.stdout.as_slice());
}
