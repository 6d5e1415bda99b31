use std::process::Command;

use rankgap::instance::InstanceFile;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_rankgap"));
    for var in ["RANKGAP_OUTPUT", "RANKGAP_WORKERS", "RANKGAP_BUDGET", "RANKGAP_K"] {
        c.env_remove(var);
    }
    c
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn reduce_writes_instance_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("a.qe");
    let out = dir.path().join("a.json");
    std::fs::write(&src, "field: GF(2)\nvars: 2\nx1 + x2\n").unwrap();
    let (code, stdout, _) = run(bin()
        .args(["reduce", "--mode", "direct", "-k", "1"])
        .arg(&src)
        .arg("--output")
        .arg(&out));
    assert_eq!(code, 0);
    assert!(stdout.starts_with("coordinates 4, constraints 1"), "{stdout}");
    let inst = InstanceFile::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((inst.n, inst.d, inst.coordinate_count), (2, 1, 4));
    assert_eq!(inst.subspace().unwrap().constraint_count(), 1);
}

#[test]
fn env_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("a.qe");
    std::fs::write(&src, "GF(3); x1*x2 - 1").unwrap();
    let (code, stdout, _) = run(bin()
        .args(["reduce", "--mode", "direct"])
        .arg(&src)
        .env("RANKGAP_K", "2"));
    assert_eq!(code, 0);
    let inst = InstanceFile::from_json(&stdout).unwrap();
    assert_eq!(inst.d, 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cnf");
    std::fs::write(&bad, "p cnf 2 1\n1 3 0\n").unwrap();
    let (code, _, stderr) = run(bin().args(["reduce", "--mode", "superposition"]).arg(&bad));
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "{stderr}");

    let ok = dir.path().join("ok.cnf");
    std::fs::write(&ok, "p cnf 4 1\n1 2 3 0\n").unwrap();
    let (code, _, stderr) = run(bin()
        .args(["reduce", "--mode", "superposition", "--max-size", "100"])
        .arg(&ok));
    assert_eq!(code, 3, "{stderr}");

    let (code, _, _) = run(bin().args(["reduce", "--mode", "direct", "/nonexistent/x.qe"]));
    assert_eq!(code, 2);
    let (code, stdout, _) = run(bin().arg("--help"));
    assert_eq!(code, 0);
    assert!(stdout.contains("minrank"));
    let (code, _, _) = run(bin().arg("frobnicate"));
    assert_eq!(code, 2);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("a.qe");
    let inst = dir.path().join("a.json");
    std::fs::write(&src, "GF(2)\nx1 + x2\n").unwrap();
    let (code, ..) = run(bin().args(["reduce", "--mode", "direct"]).arg(&src).arg("-o").arg(&inst));
    assert_eq!(code, 0);
    let (code, stdout, _) = run(bin().arg("verify").arg(&inst).args(["--assignment", "1,0"]).arg("-o").arg(dir.path().join("v.json")));
    assert_eq!(code, 0);
    assert!(stdout.starts_with("not a member: constraint 0"), "{stdout}");
    let (code, stdout, _) = run(bin().arg("verify").arg(&inst).args(["--y", "0,0,0,0"]));
    assert_eq!(code, 0);
    assert!(stdout.contains("\"zero\": true"));
    let (code, _, _) = run(bin().arg("verify").arg(&inst).args(["--y", "1,1"]));
    assert_eq!(code, 2);
}

#[test]
fn descend_against_instance() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("a.qe");
    let inst = dir.path().join("a.json");
    std::fs::write(&src, "GF(2)\nx1 + x2\n").unwrap();
    run(bin().args(["reduce", "--mode", "direct"]).arg(&src).arg("-o").arg(&inst));
    // alpha * H_1 of the honest vector at (1,1): every entry alpha.
    let m = dir.path().join("m.txt");
    std::fs::write(&m, "3 3 GF(2^2)\n(1,0) (1,0) (1,0)\n(1,0) (1,0) (1,0)\n(1,0) (1,0) (1,0)\n").unwrap();
    let (code, stdout, stderr) = run(bin()
        .args(["descend", "--field", "GF(2^2)"])
        .arg(&m)
        .arg("--instance")
        .arg(&inst));
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.contains("\"rank\": 1"));
    // y_{x1} = alpha, y_{x2} = 0 violates x1 + x2 = 0, so the input is rejected.
    std::fs::write(&m, "3 3 GF(2^2)\n0 (1,0) 0\n(1,0) (1,0) 0\n0 0 0\n").unwrap();
    let (code, _, _) = run(bin()
        .args(["descend", "--field", "GF(2^2)"])
        .arg(&m)
        .arg("--instance")
        .arg(&inst));
    assert_eq!(code, 2);
}
