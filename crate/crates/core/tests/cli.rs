use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_MAX_D")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hurwitz(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    hurwitz(args).status.code().unwrap()
}

#[test]
fn documented_examples() {
    let simple = ["--profiles", "2,1"].repeat(4);
    let mut args = vec!["hurwitz", "--d", "3"];
    args.extend(simple.iter().copied());
    args.push("--connected");
    assert_eq!(stdout(&args), "4");
    assert_eq!(stdout(&["genus0", "--d", "2"]), "1/2");
    assert_eq!(
        stdout(&["triangle", "2", "3", "5"]),
        r#"{"geometry":"spherical","group":"A5","order":60}"#
    );
}

#[test]
fn hurwitz_modes() {
    let base = [
        "hurwitz",
        "--d",
        "3",
        "--profiles",
        "3",
        "--profiles",
        "3",
        "--profiles",
        "3",
    ];
    assert_eq!(stdout(&base), "1/3");
    let oracle = [&base[..], &["--oracle"]].concat();
    assert_eq!(stdout(&oracle), "1/3");
    let json = [&base[..], &["--format", "json"]].concat();
    assert_eq!(
        stdout(&json),
        r#"{"d":3,"profiles":[[3],[3],[3]],"genus":1,"disconnected":"1/3","connected":"1/3"}"#
    );
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["class-size", "2,1"]), "3");
    assert_eq!(stdout(&["char", "--lambda", "2,1", "--mu", "3"]), "-1");
    assert_eq!(stdout(&["lr", "--lambda", "2,1", "--mu", "2,1", "--eta", "3,2,1"]), "2");
    assert_eq!(stdout(&["kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"]), "1");
    assert_eq!(stdout(&["cover-genus", "--d", "2", "--mult", "1,1,1,1,1,1"]), "2");
    assert_eq!(stdout(&["profile-inf", "--d", "3", "--n", "4"]), "3");
    assert_eq!(stdout(&["monodromy-count", "2,1,1"]), "3");
    assert_eq!(stdout(&["fq-config-count", "--p", "7", "--m", "3"]), "20");
    assert_eq!(stdout(&["gw", "--d", "4", "--g", "1"]), "225");
    assert_eq!(stdout(&["kontsevich", "--d", "4"]), "620");
    assert_eq!(stdout(&["gw", "--d", "3"]), "12");
}

#[test]
fn fermat_matches_direct_scan() {
    // -1 is a non-square mod 7, so the conic x^2 + y^2 = 1 has no points at
    // infinity and all q + 1 of its points are affine
    assert_eq!(stdout(&["fermat-count", "--n", "2", "--m", "2", "--q", "7"]), "8");
}

#[test]
fn structured_commands() {
    assert_eq!(stdout(&["partitions", "--d", "3"]), "[[3],[2,1],[1,1,1]]");
    assert_eq!(
        stdout(&["partitions", "--d", "3", "--format", "table"]),
        "3\n2,1\n1,1,1"
    );
    assert_eq!(
        stdout(&["class-product", "--class", "2,1", "--class", "2,1"]),
        r#"{"1,1,1":"3","3":"3"}"#
    );
    assert_eq!(
        stdout(&["floor-diagrams", "--d", "2"]),
        r#"[{"d":2,"g":0,"edges":[[1,2,1]],"mu":1,"nu":1}]"#
    );
    assert_eq!(
        stdout(&[
            "molien",
            "--action",
            "cyclic",
            "--s",
            "3",
            "--weights",
            "1,2",
            "--terms",
            "3"
        ]),
        "[1,0,1,2]"
    );
    let table = stdout(&["char-table", "--d", "2", "--format", "table"]);
    assert_eq!(table, "λ \\ μ  2   1,1\n2      1   1\n1,1    -1  1");
}

#[test]
fn invariance_checks() {
    let args = ["invariant-check", "--action", "symmetric", "--n", "3", "--poly"];
    assert_eq!(stdout(&[&args[..], &["x1*x2 + x1*x3 + x2*x3"]].concat()), "true");
    assert_eq!(stdout(&[&args[..], &["x1"]].concat()), "false");
    let dihedral = [
        "invariant-check",
        "--action",
        "dihedral",
        "--s",
        "4",
        "--poly",
        "x1*x2*x3*x4",
    ];
    assert_eq!(stdout(&dihedral), "false");
}

#[test]
fn config_file_actions() {
    let dir = std::env::temp_dir().join(format!("hurwitz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.json");
    std::fs::write(&path, r#"{"n":1,"s":2,"generators":[{"perm":[0],"exponents":[1]}]}"#).unwrap();
    let out = stdout(&["molien", "--config", path.to_str().unwrap(), "--terms", "4"]);
    assert_eq!(out, "[1,0,1,0,1]");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["char", "--lambda", "2,1"]), 2);
    assert_eq!(code(&["char", "--lambda", "2,1", "--mu", "3,1"]), 2);
    assert_eq!(code(&["gw", "--d", "3", "--g", "2"]), 2);
    assert_eq!(code(&["gw", "--d", "7"]), 3);
    assert_eq!(code(&["molien", "--action", "trivial", "--n", "2", "--terms", "65"]), 3);
    assert_eq!(
        code(&[
            "molien",
            "--action",
            "symmetric",
            "--n",
            "6",
            "--max-group-order",
            "100"
        ]),
        3
    );
    assert_eq!(code(&["hurwitz", "--d", "6", "--profiles", "2,1,1,1,1", "--oracle"]), 3);
    assert_eq!(code(&["fq-config-count", "--p", "6", "--m", "2"]), 2);
}

#[test]
fn degree_bound_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["partitions", "--d", "5"])
        .env("HURWITZ_MAX_D", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(code(&["partitions", "--d", "5", "--max-d", "4"]), 3);
    assert_eq!(code(&["partitions", "--d", "41"]), 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["floor-diagrams", "--d", "4", "--g", "1"];
    let first = stdout(&args);
    for _ in 0..3 {
        assert_eq!(stdout(&args), first);
    }
    let args = ["char-table", "--d", "6"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn json_round_trips() {
    let text = stdout(&["char-table", "--d", "4"]);
    let table: hurwitz::characters::CharacterTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table, hurwitz::characters::CharacterTable::new(4).unwrap());
    let text = stdout(&["class-product", "--class", "3,1", "--class", "2,2"]);
    let map: std::collections::BTreeMap<String, String> = serde_json::from_str(&text).unwrap();
    let parsed = hurwitz::class_algebra::ClassAlgebraElement::from_json_map(4, &map).unwrap();
    let direct = hurwitz::class_algebra::product_of_class_sums(4, &["3,1".parse().unwrap(), "2,2".parse().unwrap()]);
    assert_eq!(parsed, direct.unwrap());
}
