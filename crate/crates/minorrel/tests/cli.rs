use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_minorrel"));
    c.env_remove("MINORREL_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let ok = run(&["regularity", "--t", "2", "--m", "3", "--n", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stderr.is_empty());

    for args in [
        &["nonsense"][..],
        &["regularity", "--t", "2", "--m", "3"],
        &["regularity", "--t", "2", "--m", "3", "--n", "4", "--frobnicate"],
        &["regularity", "--t", "two", "--m", "3", "--n", "4"],
        &["export", "--t", "2", "--m", "3", "--n", "4", "--d", "2", "--format", "csv"],
        &["verify", "--m", "2", "--n", "4", "--poly", "[1|1]", "--probe"],
        &["relation", "--kind", "g", "--t", "2"],
        &["decompose", "--t", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(stderr(&o).contains("--help"), "{args:?}: {}", stderr(&o));
    }

    for (args, needle) in [
        (&["regularity", "--t", "4", "--m", "3", "--n", "5"][..], "1 <= t"),
        (&["plethysm", "--mu", "1,3", "--t", "2"], "invalid partition"),
        (&["plethysm", "--mu", "7", "--t", "2"], "--confirm-large"),
        (&["relation", "--kind", "f", "--t", "2", "--u", "1", "--v", "0"], "u+v even"),
        (&["relation", "--kind", "det", "--t", "2", "--rows", "1,3;1,2", "--cols", "1,2;1,3"], "initial segment"),
        (&["minimality", "--t", "2", "--shape", "3,1|3,1"], "does not occur"),
        (&["verify", "--m", "2", "--n", "2", "--poly", "[1,2|1,2"], "unclosed"),
        (&["verify", "--m", "2", "--n", "2", "--file", "/nonexistent/x"], "cannot read"),
        (&["hilbert", "--t", "2", "--m", "5", "--n", "5", "--d", "3", "--brute"], "--confirm-large"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).lines().any(|l| l.starts_with("error: ")), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }

    for args in [&["--help"][..], &["--version"], &["minimality", "--help"]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: [&[&str]; 6] = [
        &["decompose", "--t", "2", "--d", "3", "--format", "json"],
        &["plethysm", "--mu", "2,2", "--t", "2"],
        &["relation", "--kind", "h", "--t", "3", "--u", "2", "--mirror"],
        &["verify", "--m", "3", "--n", "3", "--poly", "[1,2|1,2][1,3|1,3] - [1,2|1,3][1,3|1,2]", "--probe", "--seed", "11"],
        &["minimality", "--t", "2", "--shape", "6,2|7,1", "--seed", "3"],
        &["tshape", "--t", "3", "--d", "3", "--m", "5", "--n", "6", "--format", "json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn verdict_ignores_the_order_seed() {
    let status = |seed: &str| {
        let o = run(&["minimality", "--t", "2", "--shape", "6,2|7,1", "--seed", seed]);
        let s = stdout(&o);
        let start = s.find("\"status\"").unwrap();
        s[start..s.find(",\"witnesses\"").unwrap()].to_string()
    };
    let base = status("0");
    for seed in ["1", "2", "17"] {
        assert_eq!(status(seed), base);
    }
}

#[test]
fn exported_generators_verify() {
    let dir = std::env::temp_dir().join(format!("minorrel-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("gens.txt");
    let o = run(&["export", "--t", "2", "--m", "3", "--n", "5", "--d", "3"]);
    std::fs::write(&file, &o.stdout).unwrap();
    let v = run(&["verify", "--m", "3", "--n", "5", "--file", file.to_str().unwrap(), "--format", "text"]);
    assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
    let lines: Vec<_> = stdout(&v).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), stdout(&o).lines().count());
    assert!(lines.iter().all(|l| l == "relation"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn relation_text_feeds_verify() {
    for (kind, t, u, m, n) in [("f", "3", "1", "4", "6"), ("g", "2", "1", "3", "4"), ("h", "3", "2", "5", "7")] {
        let mut args = vec!["relation", "--kind", kind, "--t", t, "--u", u, "--format", "text"];
        if kind == "f" {
            args.extend(["--v", "3"]);
        }
        let p = stdout(&run(&args));
        let v = run(&["verify", "--m", m, "--n", n, "--poly", p.trim(), "--probe", "--seed", "5", "--format", "text"]);
        assert_eq!(stdout(&v), "relation (probable)\n", "{kind}: {}", stderr(&v));
    }
}

#[test]
fn plethysm_cache() {
    let dir = std::env::temp_dir().join(format!("minorrel-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let args = ["plethysm", "--mu", "2,1,1", "--t", "2"];
    let plain = run(&args);

    let first = bin().args(args).env("MINORREL_CACHE_DIR", &dir).output().unwrap();
    assert_eq!(first.stdout, plain.stdout);
    let file = dir.join("plethysm-v1.json");
    let stored = std::fs::read_to_string(&file).unwrap();
    assert!(stored.contains("\"mu\":[2,1,1]"), "{stored}");

    // served from the cache, the file is left alone
    let second = bin().args(args).env("MINORREL_CACHE_DIR", &dir).output().unwrap();
    assert_eq!(second.stdout, plain.stdout);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), stored);

    // the flag wins over the variable
    let other = dir.join("other");
    let o = bin()
        .args(args)
        .args(["--cache-dir", other.to_str().unwrap()])
        .env("MINORREL_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.stdout, plain.stdout);
    assert!(other.join("plethysm-v1.json").exists());

    // a damaged cache is reported and rebuilt
    std::fs::write(&file, "{not json").unwrap();
    let o = bin().args(args).env("MINORREL_CACHE_DIR", &dir).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, plain.stdout);
    assert!(stderr(&o).contains("warning: ignoring plethysm cache"));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), stored);

    std::fs::remove_dir_all(&dir).unwrap();
}
