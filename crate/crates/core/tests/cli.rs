use std::process::{Command, Output};

use pythia::output::{parse_csv, parse_jsonl, OutputRecord};
use pythia::Claim;

fn pythia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pythia"))
        .args(args)
        .env_remove("PYTHIA_MAX_WIDTH")
        .output()
        .unwrap()
}

fn pythia_narrow(bits: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pythia"))
        .args(args)
        .env("PYTHIA_MAX_WIDTH", bits)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn primitive_triples_jsonl() {
    let o = pythia(&[
        "triples",
        "--max-c",
        "13",
        "--primitive",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        concat!(
            "{\"kind\":\"triple\",\"payload\":{\"a\":3,\"b\":4,\"c\":5}}\n",
            "{\"kind\":\"triple\",\"payload\":{\"a\":5,\"b\":12,\"c\":13}}\n",
        )
    );
}

#[test]
fn jsonl_is_default_and_csv_round_trips() {
    let jsonl = pythia(&["triples", "--max-c", "50"]);
    let csv = pythia(&["triples", "--max-c", "50", "--format", "csv"]);
    let from_jsonl = parse_jsonl(&stdout(&jsonl)).unwrap();
    let from_csv = parse_csv(&stdout(&csv)).unwrap();
    assert_eq!(from_jsonl, from_csv);
    assert_eq!(from_jsonl.len(), 20);
    assert!(stdout(&csv).starts_with("kind,a,b,c\ntriple,3,4,5\n"));
}

#[test]
fn decompose_prints_canonical_params() {
    let o = pythia(&["decompose", "9", "12", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"kind\":\"params\",\"payload\":{\"params\":{\"delta\":3,\"m\":2,\"n\":1},\"leg_swap\":false}}\n"
    );
    let o = pythia(&["decompose", "3", "4", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain error"));
}

#[test]
fn two_square_listing() {
    let o = pythia(&["two-square", "--max-z", "11", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "kind,x,y,z\ntwo_two,1,2,3\ntwo_two,2,4,6\ntwo_two,3,6,9\ntwo_two,7,4,9\ntwo_two,7,6,11\n"
    );
    let odd = pythia(&["two-square", "--max-z", "200", "--odd-k-only"]);
    let all = pythia(&["two-square", "--max-z", "200"]);
    assert_eq!(odd.stdout, all.stdout);
}

#[test]
fn box_modes() {
    let o = pythia(&["boxes", "--max-t", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "kind,x,y,z,t,d\nbox,1,2,2,3,\n");
    let o = pythia(&["boxes", "--max-t", "9", "--equal-edge", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "kind,x,y,z,t,d\nbox,2,2,1,3,\nbox,4,4,2,6,\nbox,4,4,7,9,\nbox,6,6,3,9,\n"
    );
    let o = pythia(&[
        "boxes",
        "--max-t",
        "200",
        "--face-diagonal",
        "--max-param",
        "3",
    ]);
    let records = parse_jsonl(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 3);
    let OutputRecord::Box(first) = &records[0] else {
        panic!()
    };
    assert_eq!((first.shape.edges(), first.d), ([6, 8, 24], Some(10)));
    let o = pythia(&["boxes", "--max-t", "9", "--face-diagonal"]);
    assert_eq!(o.status.code(), Some(1));
    let o = pythia(&[
        "boxes",
        "--max-t",
        "9",
        "--equal-edge",
        "--face-diagonal",
        "--max-param",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn pair_families() {
    let o = pythia(&[
        "pairs", "--family", "1", "--M", "2", "--N", "1", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "kind,t1_a,t1_b,t1_c,t2_a,t2_b,t2_c,p1_delta,p1_m,p1_n,p2_delta,p2_m,p2_n,shared,mode\n\
         pair,20,21,29,12,16,20,1,5,2,4,2,1,20,even_leg\n"
    );
    for args in [
        &[
            "pairs", "--family", "2", "--K", "1", "--m", "2", "--n", "1", "--M", "2", "--N", "1",
        ][..],
        &[
            "pairs", "--family", "3", "--K", "1", "--m", "2", "--n", "1", "--M", "2", "--N", "1",
        ],
        &["pairs", "--family", "4", "--d", "9", "--M", "2", "--N", "1"],
    ] {
        let o = pythia(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let records = parse_jsonl(&stdout(&o)).unwrap();
        let OutputRecord::Pair(pair) = &records[0] else {
            panic!()
        };
        assert_eq!(pair.t2().c(), pair.shared());
    }
    let o = pythia(&["pairs", "--family", "4", "--d", "5", "--M", "2", "--N", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let o = pythia(&["verify", "prop1", "--bound", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let records = parse_jsonl(&stdout(&o)).unwrap();
    let OutputRecord::Report(r) = &records[0] else {
        panic!()
    };
    assert_eq!(
        (r.claim(), r.examined(), r.holds()),
        (Claim::Prop1, 90_000, true)
    );

    let o = pythia(&["verify", "fault-no-triples", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let records = parse_jsonl(&stdout(&o)).unwrap();
    let OutputRecord::Report(r) = &records[0] else {
        panic!()
    };
    assert_eq!(r.counterexamples(), &[vec![3, 4, 5]]);

    assert_eq!(pythia(&["verify", "prop1"]).status.code(), Some(1));
    assert_eq!(pythia(&["nonsense"]).status.code(), Some(1));
    assert_eq!(pythia(&["--help"]).status.code(), Some(0));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["boxes", "--max-t", "150"];
    assert_eq!(pythia(&args).stdout, pythia(&args).stdout);
    let args = ["triples", "--max-c", "500", "--jobs", "3"];
    assert_eq!(pythia(&args).stdout, pythia(&args[..3]).stdout);
}

#[test]
fn narrow_width_surfaces_overflow() {
    let o = pythia_narrow("16", &["triples", "--max-c", "300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));
    let o = pythia_narrow("16", &["triples", "--max-c", "200"]);
    assert_eq!(o.status.code(), Some(0));

    // Fourth powers use the double-width lane (32 bits here).
    assert_eq!(
        pythia_narrow("16", &["verify", "prop1", "--bound", "100"])
            .status
            .code(),
        Some(0)
    );
    let o = pythia_narrow("16", &["verify", "prop1", "--bound", "200"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));

    let o = pythia_narrow("16", &["decompose", "65535", "65536", "1"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(
        pythia_narrow("abc", &["triples", "--max-c", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        pythia_narrow("128", &["triples", "--max-c", "5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn table_output() {
    let o = pythia(&[
        "triples",
        "--max-c",
        "13",
        "--primitive",
        "--format",
        "table",
    ]);
    assert_eq!(stdout(&o), "a   b   c\n3   4   5\n5  12  13\n");
}
