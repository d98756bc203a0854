use std::io::Write;
use std::process::Command;

fn sscode(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sscode"))
        .args(args)
        .output()
        .expect("spawn sscode")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn swd_closed_table_18_3_12() {
    let out = sscode(&[
        "swd",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--method",
        "closed",
        "--output",
        "table",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("j = 1"));
    assert!(text.contains("12              12"));
    assert!(text.contains("18              1"));
    assert!(text.contains("16              9"));
}

#[test]
fn swd_oracle_matches_closed_csv() {
    let closed = sscode(&[
        "swd",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--method",
        "closed",
        "--output",
        "csv",
    ]);
    let oracle = sscode(&[
        "swd",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--method",
        "oracle-subspace",
        "--output",
        "csv",
    ]);
    assert!(closed.status.success() && oracle.status.success());
    assert_eq!(stdout(&closed), stdout(&oracle));
    assert!(stdout(&closed).starts_with("j,i,count\n1,12,12\n"));
}

#[test]
fn lift_closed_18_3_12() {
    let out = sscode(&[
        "lift",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--l",
        "2",
        "--output",
        "table",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + 96z^12 + 432z^16 + 200z^18");

    let proj = sscode(&[
        "lift",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--l",
        "2",
        "--projective",
    ]);
    assert_eq!(stdout(&proj).trim(), "1 + 96z^6 + 432z^8 + 200z^9");
}

#[test]
fn hierarchy_outputs() {
    let out = sscode(&["hierarchy", "--q", "3", "--k", "3", "--punctures", "2"]);
    assert_eq!(stdout(&out).trim(), "{12, 16, 18}");
    let proj = sscode(&[
        "hierarchy",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--projective",
    ]);
    assert_eq!(stdout(&proj).trim(), "{6, 8, 9}");
    let ex3 = sscode(&[
        "hierarchy",
        "--q",
        "3",
        "--k",
        "4",
        "--punctures",
        "1,2",
        "--projective",
    ]);
    assert_eq!(stdout(&ex3).trim(), "{23, 31, 34, 35}");
}

#[test]
fn json_output_is_wellformed() {
    let out = sscode(&[
        "swd",
        "--q",
        "2",
        "--k",
        "6",
        "--punctures",
        "2,3",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["q"], 2);
    assert_eq!(v["k"], 6);
    assert_eq!(v["n"], 53);
    assert_eq!(v["swd"]["1"]["26"], "42");
    assert_eq!(v["swd"]["6"]["53"], "1");
}

#[test]
fn verify_passes_18_3_12() {
    let out = sscode(&[
        "verify",
        "--q",
        "3",
        "--k",
        "3",
        "--punctures",
        "2",
        "--l",
        "2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("verify: PASS"));
}

#[test]
fn basis_file_punctures() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // Punctures <(2,1,0,0)> and <(1,1,0,0),(1,0,1,0)>.
    write!(f, "3 1 4\n2 1 0 0\n\n3 2 4\n1 1 0 0\n1 0 1 0\n").unwrap();
    let path = f.path().to_str().unwrap();
    let out = sscode(&["construct", "--q", "3", "--k", "4", "--basis-file", path]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).starts_with("[70, 4] code over GF(3), expected d = 46"));

    let h = sscode(&["hierarchy", "--q", "3", "--k", "4", "--basis-file", path]);
    assert_eq!(stdout(&h).trim(), "{46, 62, 68, 70}");
}

#[test]
fn simplex_command() {
    let out = sscode(&["simplex", "--q", "2", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("[7, 3] code over GF(2), expected d = 4"));
    assert!(text.contains("j = 1"));
}

#[test]
fn bad_arguments_exit_2() {
    // Overlapping coordinate punctures: dims sum past k.
    let out = sscode(&["swd", "--q", "2", "--k", "3", "--punctures", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // Closed form beyond two punctures is refused with a hint.
    let out = sscode(&[
        "swd",
        "--q",
        "2",
        "--k",
        "6",
        "--punctures",
        "1,2,3",
        "--method",
        "closed",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle-subspace"));
}

#[test]
fn three_punctures_via_oracle() {
    let out = sscode(&[
        "swd",
        "--q",
        "2",
        "--k",
        "6",
        "--punctures",
        "1,2,3",
        "--method",
        "oracle-subspace",
        "--output",
        "csv",
    ]);
    assert!(out.status.success());
    // n = 63 - 1 - 3 - 7 = 52 columns in the projective view; full has
    // n = 64 - 2 - 4 - 8 + 2 = 52.
    assert!(stdout(&out).contains("6,52,1\n"));
}

#[test]
fn enum_limit_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_sscode"))
        .args([
            "swd",
            "--q",
            "3",
            "--k",
            "3",
            "--punctures",
            "2",
            "--method",
            "oracle-subspace",
        ])
        .env("SSW_ENUM_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn block_layout_same_distribution() {
    let lex = sscode(&[
        "swd",
        "--q",
        "2",
        "--k",
        "4",
        "--punctures",
        "1",
        "--method",
        "oracle-subspace",
        "--output",
        "csv",
    ]);
    let block = sscode(&[
        "swd",
        "--q",
        "2",
        "--k",
        "4",
        "--punctures",
        "1",
        "--method",
        "oracle-subspace",
        "--output",
        "csv",
        "--block-layout",
    ]);
    assert_eq!(stdout(&lex), stdout(&block));
}
