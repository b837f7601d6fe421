use std::process::{Command, Output};

fn compident(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compident"))
        .args(args)
        .env_remove("COMPIDENT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

#[test]
fn verify_single_identity_json() {
    let o = compident(&[
        "verify", "--id", "eq5", "--k", "1..8", "--n", "0..8", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"id\":\"eq5\",\"cases\":72,\"failed\":0,\"failures\":[]}\n"
    );
    assert!(stderr(&o).is_empty());
}

#[test]
fn verify_text_and_timing() {
    let o = compident(&["verify", "--id", "eq38", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("eq38"));
    assert!(stdout(&o).contains("225 cases"));
    let o = compident(&[
        "verify", "--id", "eq6", "--k", "1..3", "--n", "1", "--timing",
    ]);
    assert!(stdout(&o).contains("\"elapsed_ms\":"));
}

#[test]
fn polynomial_and_pointwise_modes() {
    let o = compident(&["verify", "--id", "eq13", "--k", "1..4"]);
    assert_eq!(
        stdout(&o),
        "{\"id\":\"eq13\",\"cases\":4,\"failed\":0,\"failures\":[]}\n"
    );
    let o = compident(&["verify", "--id", "eq13", "--k", "1..4", "--n", "0..2"]);
    assert_eq!(
        stdout(&o),
        "{\"id\":\"eq13\",\"cases\":12,\"failed\":0,\"failures\":[]}\n"
    );
}

#[test]
fn seeded_pair_run_is_reproducible() {
    let args = [
        "verify",
        "--id",
        "pair5_eh",
        "--k",
        "1..6",
        "--seed",
        "7",
        "--samples",
        "5",
    ];
    let a = compident(&args);
    let b = compident(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "{\"id\":\"pair5_eh\",\"cases\":30,\"failed\":0,\"failures\":[]}\n"
    );
}

#[test]
fn tables() {
    let o = compident(&["table", "stirling", "--n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[[\"1\"],[\"-1\",\"1\"],[\"2\",\"-3\",\"1\"],[\"-6\",\"11\",\"-6\",\"1\"]]\n"
    );
    let o = compident(&["table", "bernoulli", "--max", "6"]);
    assert_eq!(
        stdout(&o),
        "[\"1\",\"-1/2\",\"1/6\",\"0\",\"-1/30\",\"0\",\"1/42\"]\n"
    );
    let o = compident(&[
        "table", "gaussian", "--n", "5", "--k", "2", "--format", "text",
    ]);
    assert_eq!(stdout(&o), "1 1 2 2 2 1 1\n");
}

#[test]
fn compositions_of_four() {
    let o = compident(&["compositions", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1,1,1,1\n1,1,2\n1,2,1\n1,3\n2,1,1\n2,2\n3,1\n4\n"
    );
}

#[test]
fn list_is_stable() {
    let o = compident(&["list", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<&str> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(ids.len(), 25);
    assert_eq!(ids[0], "eq5");
    assert_eq!(ids[24], "pair5_he");
    let o = compident(&["list"]);
    let first: serde_json::Value =
        serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["id"], "eq5");
    assert_eq!(first["params"][0]["name"], "k");
    assert_eq!(first["params"][0]["min"], 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--id", "eq99"][..],
        &["verify", "--id", "eq5", "--k", "5..1"],
        &["verify", "--id", "eq5", "--k", "one..two"],
        &["verify", "--id", "eq5", "--k", "0..4"],
        &["verify", "--id", "eq19", "--t", "0..2"],
        &["verify", "--id", "eq5", "--jobs", "0"],
        &["verify", "--id", "pair1_eh", "--a", "1/0"],
        &["verify", "--id", "eq5", "--all"],
        &["verify"],
        &["table", "gaussian", "--n", "-1", "--k", "2"],
        &["compositions", "0"],
        &["nonsense"],
    ] {
        let o = compident(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_compident"))
        .args(["verify", "--id", "eq42", "--k", "1..6"])
        .env("COMPIDENT_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("COMPIDENT_BUDGET"));
    let o = Command::new(env!("CARGO_BIN_EXE_compident"))
        .args(["compositions", "22"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_compident"))
        .args(["verify", "--id", "eq5", "--k", "21", "--n", "1"])
        .env("COMPIDENT_BUDGET", "21")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_compident"))
        .args(["list"])
        .env("COMPIDENT_BUDGET", "many")
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(0),
        "budget only matters where enumeration happens"
    );
}

#[test]
fn help_exits_zero() {
    let o = compident(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
