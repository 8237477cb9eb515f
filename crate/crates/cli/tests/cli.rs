use assert_cmd::Command;
use realflag_cli::{
    ChainsReport, CheckReport, DerhamReport, FormsReport, H2Report, SatakeReport, Table1Report,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn realflag() -> Command {
    Command::cargo_bin("realflag").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = realflag()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).unwrap()
}

fn round_trip<T>(args: &[&str]) -> T
where
    T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    let parsed: T = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, text);
    assert_eq!(serde_json::from_str::<T>(&again).unwrap(), parsed);
    parsed
}

#[test]
fn h2_split_a3() {
    let r: H2Report = round_trip(&[
        "h2",
        "--algebra",
        "AI",
        "--rank",
        "3",
        "--theta",
        "",
        "--ring",
        "Z",
    ]);
    assert_eq!(r.free_rank, 0);
    assert_eq!(r.torsion_2, 2);
    assert!(r.agree);
    assert_eq!(r.theta, Vec::<usize>::new());
    assert_eq!(r.generators, ["s1*s3", "s1*s2 - s3*s2"]);
    let text = stdout(&[
        "h2",
        "--algebra",
        "AI",
        "--rank",
        "3",
        "--theta",
        "",
        "--ring",
        "Z",
    ]);
    assert!(text.contains("agree: true"));
}

#[test]
fn h2_over_other_rings() {
    let q: H2Report = round_trip(&["h2", "--algebra", "AI", "--rank", "3", "--ring", "Q"]);
    assert_eq!((q.free_rank, q.torsion_2), (0, 0));
    let z2: H2Report = round_trip(&["h2", "--algebra", "AI", "--rank", "3", "--ring", "Z/2"]);
    // every 2-cell of the A3 flag manifold survives mod 2
    assert_eq!((z2.free_rank, z2.torsion_2), (5, 0));
    let all: H2Report = round_trip(&[
        "h2",
        "--algebra",
        "AIII_1",
        "--p",
        "3",
        "--q",
        "5",
        "--theta",
        "all",
    ]);
    assert_eq!((all.free_rank, all.torsion_2), (0, 0));
    assert_eq!(all.theta, [1, 2, 3]);
}

#[test]
fn derham_eii() {
    let r: DerhamReport = round_trip(&["derham", "--algebra", "EII", "--theta", ""]);
    assert_eq!(r.s, 2);
    assert_eq!(r.generators, ["s3", "s4"]);
    assert!(stdout(&["derham", "--algebra", "EII"]).contains("s = 2"));
}

#[test]
fn table1_zero_diff() {
    let r: Table1Report = round_trip(&["table1"]);
    assert!(r.matches);
    assert!(r.differing_lines.is_empty());
    assert_eq!(r.table.lines().count(), 20);
    assert!(stdout(&["table1"]).contains("0 lines"));
}

#[test]
fn satake_su24() {
    let r: SatakeReport = round_trip(&["satake", "--algebra", "AIII_1", "--p", "2", "--q", "4"]);
    assert_eq!(r.black, [3]);
    assert_eq!(r.arrows, [(1, 5), (2, 4)]);
    assert_eq!(r.perp_arrows, [(1, 5)]);
    assert_eq!(r.perp_images, r.sigma_two);
    assert_eq!(r.hk.dim_z_m, 2);
    let text = stdout(&["satake", "--algebra", "AIII_1", "--p", "2", "--q", "4"]);
    assert!(text.contains("○1 - ○2 - ●3 - ○4 - ○5"));
    assert!(text.contains("1 <--> 5"));
}

#[test]
fn chains_dump_format() {
    let text = stdout(&["chains", "--algebra", "BI_1", "--rank", "2"]);
    assert_eq!(text, "2 2 2\n0 0\n2 0\n3 2 2\n0 0\n2 0\n");
    let r: ChainsReport = round_trip(&["chains", "--algebra", "AI", "--rank", "3"]);
    assert_eq!(r.system, "A3");
    assert_eq!(r.d2.len(), r.cells[1].len());
    assert_eq!(r.d3.len(), r.cells[2].len());
}

#[test]
fn forms_vectors() {
    let text = stdout(&["forms", "--p", "2", "--q", "4"]);
    assert_eq!(text.lines().count(), 1);
    let r: FormsReport = round_trip(&["forms", "--algebra", "AIII_1", "--p", "2", "--q", "4"]);
    assert_eq!(
        r.block_form,
        [["2/3", "-1/3", "2/3", "-1/3", "-1/3", "-1/3"]]
    );
    assert_eq!(r.z_vectors.len(), 1);
}

#[test]
fn check_small_rank() {
    let r: CheckReport = round_trip(&["check", "--max-rank", "2"]);
    assert_eq!(r.failed, 0);
    assert!(r.passed > 0);
}

#[test]
fn deterministic_output() {
    for args in [
        &["h2", "--algebra", "FI", "--theta", "2", "--format", "json"][..],
        &["chains", "--algebra", "CI", "--rank", "3", "--theta", "1"][..],
        &["satake", "--algebra", "EII"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("realflag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h2.json");
    let p = path.to_str().unwrap();
    let printed = stdout(&["h2", "--algebra", "G", "--format", "json"]);
    realflag()
        .args(["h2", "--algebra", "G", "--format", "json", "--out", p])
        .assert()
        .success()
        .stdout("");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_queries_exit_one() {
    for args in [
        &["h2", "--algebra", "NOPE"][..],
        &["h2", "--algebra", "AI", "--rank", "3", "--theta", "7"][..],
        &["h2", "--algebra", "AI", "--rank", "3", "--ring", "Z/0"][..],
        &["h2", "--algebra", "AIII_1", "--p", "4", "--q", "3"][..],
        &["forms", "--p", "1", "--q", "3"][..],
        &["satake", "--algebra", "AI", "--rank", "3"][..],
        &["frobnicate"][..],
    ] {
        realflag().args(args).assert().code(1);
    }
}
