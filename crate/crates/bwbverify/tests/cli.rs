//! End-to-end checks of the `bwbverify` binary: output formats, exit codes,
//! determinism across `--jobs`, and the on-disk cohomology cache.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bwbverify"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn bwb_output_formats() {
    let (code, out, _) = run(&["bwb", "w1+w6-4w2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Acyclic (singular at vertex 4 after s2 s4 s3 s5)");

    let (code, out, _) = run(&["bwb", "w1+w3+w5-3w2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "V^{w1}[-2] (w = s2 s4)");

    let (code, out, _) = run(&["bwb", "[0,0,0,0,0,0]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "C[0]");
}

#[test]
fn tensor_and_friends() {
    let (code, out, _) = run(&["tensor", "w6-w2", "w1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "O + S[w1+w6](-1)");

    let (code, out, _) = run(&["tensor", "w4", "w4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "S[2w4] + S[w3+w5](1) + O(3) + S[w1+w6](2)");

    let (code, out, _) = run(&["tensor", "w4-2w2", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "S[w4](-2)");

    let (code, out, _) = run(&["dual", "w1"]);
    assert_eq!(code, 0);
    assert!(out.contains("S[w6](-1)"));

    let (code, out, _) = run(&["rank", "Ttilde"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "22");

    let (code, out, _) = run(&["ext", "S[w1]", "S[w1]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "C[0]");

    let (code, out, _) = run(&["korder"]);
    assert_eq!(code, 0);
    assert!(out.contains("51840") && out.contains("720") && out.contains("72"));

    let (code, out, _) = run(&["roots"]);
    assert_eq!(code, 0);
    assert!(out.contains("36 positive roots") && out.contains("21"));
}

#[test]
fn verify_exit_codes_and_determinism() {
    let (code, _, _) = run(&["verify", "lemma-4.4"]);
    assert_eq!(code, 0, "fully proven ledger exits 0");

    let (code, _, _) = run(&["verify", "main-theorem"]);
    assert_eq!(code, 1, "ledger with refuted rows exits 1");

    let (code, _, err) = run(&["verify", "no-such-script"]);
    assert_eq!(code, 2, "unknown script is a usage error: {err}");

    let (code, _, _) = run(&["bwb", "garbage weight"]);
    assert_eq!(code, 2);

    let (c1, out1, _) = run(&["verify", "main-theorem", "--format", "json", "--jobs", "1"]);
    let (c2, out2, _) = run(&["verify", "main-theorem", "--format", "json", "--jobs", "3"]);
    assert_eq!((c1, c2), (1, 1));
    assert_eq!(out1, out2, "reports are byte-identical across --jobs");

    let parsed: serde_json::Value = serde_json::from_str(&out1).expect("valid JSON report");
    assert_eq!(parsed["lemma"], "main-theorem");
    assert_eq!(parsed["verdict"], "refuted");
    assert!(parsed["obligations"].as_array().unwrap().len() > 1000);
    for row in parsed["obligations"].as_array().unwrap() {
        for field in ["kind", "args", "status", "witness", "provenance"] {
            assert!(row.get(field).is_some(), "report row lacks {field}");
        }
    }
}

#[test]
fn built_in_scripts_are_listed_and_runnable() {
    let (code, out, _) = run(&["scripts"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = out.lines().collect();
    assert_eq!(
        names,
        vec![
            "lemma-3.5",
            "lemma-3.6",
            "lemma-3.7",
            "lemma-3.8",
            "lemma-3.9",
            "lemma-3.15",
            "lemma-4.2",
            "lemma-4.4",
            "lemma-4.5",
            "main-theorem"
        ]
    );
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("bwbverify-cli-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run_cached = |args: &[&str]| {
        let out = bin()
            .args(args)
            .env("BWBVERIFY_CACHE_DIR", &dir)
            .output()
            .expect("binary runs");
        (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned())
    };
    let (code, first) = run_cached(&["bwb", "w1+w6-4w2"]);
    assert_eq!(code, 0);
    let cache_file = dir.join("bwb-cache.txt");
    assert!(cache_file.exists());
    let contents = std::fs::read_to_string(&cache_file).unwrap();
    assert!(contents.contains("=>"), "line-oriented cache: {contents}");
    let (code, second) = run_cached(&["bwb", "w1+w6-4w2"]);
    assert_eq!(code, 0);
    assert_eq!(first, second);
    std::fs::remove_dir_all(&dir).ok();
}
