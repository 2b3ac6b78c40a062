use cli::{run, CharacterCache};
use serde_json::Value;
use std::fs;
use tempfile::TempDir;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn qc_with(cache: CharacterCache, args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["qcchar"];
    argv.extend_from_slice(args);
    let code = run(argv, cache, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn qc(args: &[&str]) -> Outcome {
    qc_with(CharacterCache::disabled(), args)
}

#[test]
fn gr_counts_and_errors() {
    let r = qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "0,1", "--p", "2"]);
    assert_eq!((r.code, r.out.as_str()), (0, "3\n"));
    assert_eq!(qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "0,0"]).out, "1\n");
    assert_eq!(qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "0,3"]).code, 2);
    assert_eq!(qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "x"]).code, 2);
    assert_eq!(qc(&["gr", "--quiver", "nope", "--rep", "s1", "--dim", "0,0"]).code, 2);
    assert_eq!(qc(&["gr", "--rep", "s1", "--dim", "0,0"]).code, 2);
    let listed = qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "0,1", "--list"]);
    assert_eq!(listed.out.lines().count(), 4);
}

#[test]
fn gr_reports_cap_exhaustion() {
    let r = qc(&["gr", "--quiver", "k2", "--rep", "m12", "--dim", "0,1", "--cap", "1"]);
    assert_eq!(r.code, 3, "{}", r.err);
}

#[test]
fn gr_reads_json_files() {
    let dir = TempDir::new().unwrap();
    let q = dir.path().join("k2.json");
    let m = dir.path().join("m12.json");
    fs::write(&q, r#"{"vertices":2,"arrows":[{"id":"a","source":1,"target":2},{"id":"b","source":1,"target":2}]}"#)
        .unwrap();
    fs::write(&m, r#"{"dims":[1,2],"matrices":{"a":[[1],[0]],"b":[[0],[1]]}}"#).unwrap();
    let r = qc(&["gr", "--quiver", q.to_str().unwrap(), "--rep", m.to_str().unwrap(), "--dim", "0,1", "--p", "2"]);
    assert_eq!((r.code, r.out.as_str()), (0, "3\n"), "{}", r.err);
    fs::write(&m, r#"{"dims":[1,2],"matrices":{"a":[[1],[0]]},"#).unwrap();
    assert_eq!(qc(&["gr", "--quiver", q.to_str().unwrap(), "--rep", m.to_str().unwrap(), "--dim", "0,1"]).code, 2);
}

#[test]
fn character_outputs() {
    let r = qc(&["character", "--quiver", "a2", "--object", "s1", "--style", "tilde"]);
    assert_eq!(r.out, "x^(-1,0) + x^(-1,1)\n");
    assert_eq!(qc(&["character", "--quiver", "a2", "--object", "sp1"]).out, "x^(1,0)\n");
    assert_eq!(qc(&["character", "--quiver", "a3", "--object", "sp2", "--lambda", "auto"]).code, 4);
    assert_eq!(qc(&["character", "--quiver", "a2", "--object", "s1", "--lambda", "[[0,1],[1,0]]"]).code, 4);
    assert_eq!(qc(&["character", "--quiver", "a2", "--object", "s1", "--lambda", "auto"]).code, 0);
    assert_eq!(qc(&["character", "--quiver", "preproj-a2", "--object", "s1"]).code, 2);
    assert_eq!(qc(&["character", "--quiver", "a2", "--object", "q7"]).code, 2);
}

#[test]
fn character_cache_roundtrip_and_invalidation() {
    let dir = TempDir::new().unwrap();
    let cache = || CharacterCache::at(dir.path());
    let args = ["character", "--quiver", "a3", "--object", "p1+sp2", "--style", "tilde"];
    let fresh = qc(&args);
    let first = qc_with(cache(), &args);
    let second = qc_with(cache(), &args);
    assert_eq!(first.out, fresh.out);
    assert_eq!(second.out, fresh.out);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let other = qc_with(cache(), &["character", "--quiver", "a3", "--object", "p1+sp2", "--style", "plain"]);
    assert_eq!(other.code, 0);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
    for f in fs::read_dir(dir.path()).unwrap() {
        fs::write(f.unwrap().path(), "{\"key\":1}").unwrap();
    }
    assert_eq!(qc_with(cache(), &args).out, fresh.out);
}

#[test]
fn delta_flags_and_ext() {
    assert_eq!(qc(&["delta", "--quiver", "a2", "--rep", "p1", "--type", "1,2;1,1"]).out, "1\n");
    assert_eq!(qc(&["delta", "--quiver", "a2", "--rep", "p1", "--type", "2,1;1,1"]).out, "0\n");
    assert_eq!(qc(&["delta", "--quiver", "a2", "--rep", "p1", "--type", "3;1"]).code, 2);
    assert_eq!(qc(&["delta", "--quiver", "a2", "--rep", "p1", "--type", "1;"]).code, 2);
    let f = qc(&["flags", "--quiver", "a2", "--rep", "s1+s2", "--type", "1,2;1,1", "--list"]);
    assert_eq!(f.out.lines().next(), Some("1"));
    let e = qc(&["ext", "--quiver", "preproj-a2", "--m", "s1", "--n", "s2", "--json"]);
    let v: Value = serde_json::from_str(e.out.trim()).unwrap();
    assert_eq!(v["ext_mn"], 1);
    assert_eq!(v["ext_nm"], 1);
    assert_eq!(v["hom_mn"], 0);
}

#[test]
fn verify_exchange_case() {
    let r = qc(&["verify", "exchange", "--case", "a2/s1-s2", "--p", "2", "--json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(v["scalars"], serde_json::json!(["v^1", "v^0"]));
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["degenerate"], true);
    assert!(v.get("timing_ms").is_none());
    assert_eq!(qc(&["verify", "exchange", "--case", "nope"]).code, 2);
}

#[test]
fn verify_maintheorem_case() {
    let r = qc(&["verify", "maintheorem1", "--case", "preproj-a2/s1-s2", "--depth", "3", "--p", "2"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.starts_with("maintheorem1 preproj-a2/s1-s2 pass"));
    let w = qc(&["verify", "maintheorem1", "--case", "preproj-a2/s1-s2", "--depth", "2", "--weights", "f_hom;zero"]);
    assert_eq!(w.code, 0, "{}", w.out);
    assert_eq!(qc(&["verify", "maintheorem1", "--weights", "nonsense"]).code, 2);
}

#[test]
fn verify_exit_code_on_failure() {
    let r = qc(&["verify", "exponent-id", "--case", "a2"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("exponent-id a2 fail"));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "fiber-law", "--count", "30", "--seed", "5", "--json"];
    let a = qc(&args);
    let b = qc(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
}

#[test]
fn catalog_commands() {
    let r = qc(&["catalog"]);
    assert!(r.out.starts_with("catalog version 1"));
    assert!(r.out.contains("exchange a3/m12-s3"));
    let s = qc(&["catalog", "show", "k2"]);
    assert!(s.out.contains("\"vertices\":2"));
    let o = qc(&["catalog", "show", "m12", "--quiver", "a3"]);
    assert!(o.out.contains("[1,1,0]"));
    assert_eq!(qc(&["catalog", "check"]).code, 0);
}

#[test]
fn job_files() {
    let dir = TempDir::new().unwrap();
    let job = dir.path().join("job.json");
    let body = serde_json::json!({
        "p": 2,
        "quiver": "k2",
        "objects": { "m": {"dims": [1, 2], "matrices": {"a": [[1], [0]], "b": [[0], [1]]}} },
        "tasks": [
            {"args": ["gr", "--rep", "m", "--dim", "0,1"]},
            {"args": ["character", "--object", "m", "--style", "tilde"]},
            {"args": ["gr", "--rep", "s1", "--dim", "1,0"]}
        ]
    });
    fs::write(&job, body.to_string()).unwrap();
    let r = qc(&["run", job.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "3");
    assert_eq!(lines[2], "1");
    assert_eq!(qc(&["run", job.to_str().unwrap()]).out, r.out);

    let mut bad = body.clone();
    bad["p"] = 4.into();
    fs::write(&job, bad.to_string()).unwrap();
    assert_eq!(qc(&["run", job.to_str().unwrap()]).code, 2);

    let mut bad = body.clone();
    bad["tasks"] = serde_json::json!([{"args": ["gr", "--rep", "missing", "--dim", "0,1"]}]);
    fs::write(&job, bad.to_string()).unwrap();
    assert_eq!(qc(&["run", job.to_str().unwrap()]).code, 2);

    let mut bad = body.clone();
    bad["lambda"] = "auto".into();
    fs::write(&job, bad.to_string()).unwrap();
    assert_eq!(qc(&["run", job.to_str().unwrap()]).code, 4);

    let mut bad = body;
    bad["objects"]["m"]["dims"] = serde_json::json!([1]);
    fs::write(&job, bad.to_string()).unwrap();
    assert_eq!(qc(&["run", job.to_str().unwrap()]).code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qc(&["frobnicate"]).code, 2);
    assert_eq!(qc(&["--help"]).code, 0);
    assert_eq!(qc(&["gr", "--quiver", "a2", "--rep", "s1", "--dim", "0,0", "--p", "4"]).code, 2);
}
