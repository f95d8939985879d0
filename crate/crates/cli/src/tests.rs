use serde_json::json;

use super::*;

#[test]
fn flags_override_config_override_defaults() {
    let defaults = CapPolicy::default();
    let none = Options::default();
    assert_eq!(none.policy(&Config::default()).unwrap(), defaults);

    let config = Config { cap: None, max_cap: Some(5), primes: Some(vec![7]) };
    let p = none.policy(&config).unwrap();
    assert_eq!((p.max_cap, p.primes.clone()), (5, vec![7]));

    let flags = Options { max_cap: Some(9), primes: Some(vec![3, 11]), ..Options::default() };
    let p = flags.policy(&config).unwrap();
    assert_eq!((p.max_cap, p.primes), (9, vec![3, 11]));
}

#[test]
fn policy_rejects_zero_caps_and_composites() {
    let config = Config::default();
    assert!(Options { cap: Some(0), ..Options::default() }.policy(&config).is_err());
    assert!(Options { max_cap: Some(0), ..Options::default() }.policy(&config).is_err());
    assert!(matches!(
        Options { primes: Some(vec![2, 9]), ..Options::default() }.policy(&config),
        Err(Error::InvalidDomain(_))
    ));
}

#[test]
fn list_parsing() {
    assert_eq!(parse_u64_list("2, 3,5").unwrap(), vec![2, 3, 5]);
    assert_eq!(parse_u64_list("").unwrap(), Vec::<u64>::new());
    assert!(parse_u64_list("2,-3").is_err());
    assert_eq!(parse_names(" X, Y ,"), ["X", "Y"]);
    assert_eq!(inputs_from_text("X\n\n  Y + 1 \n"), ["X", "Y + 1"]);
}

#[test]
fn command_names_round_trip() {
    for c in Command::ALL {
        assert_eq!(c.name().parse::<Command>().unwrap(), c);
    }
    assert!("syzygy".parse::<Command>().is_err());
}

#[test]
fn numbers_become_strings() {
    let v = stringify_numbers(json!({ "a": 3, "b": [1, "x", true], "c": { "d": -2 } }));
    assert_eq!(v, json!({ "a": "3", "b": ["1", "x", true], "c": { "d": "-2" } }));
}

#[test]
fn error_documents() {
    let e = error_json(&Error::UndeclaredVariable { name: "Z".into(), pos: 4 });
    assert_eq!(e["error"]["kind"], "undeclared_variable");
    assert_eq!(e["error"]["position"], "4");
    assert_eq!(error_json(&Error::Shape("x".into()))["error"]["kind"], "shape");
}

#[test]
fn report_for_unknown_and_generators() {
    let unknown = Response {
        json: json!({ "command": "member", "ring": "Z", "status": "Unknown", "cap": "2", "history": ["1", "2"] }),
        exit_code: 2,
        text: None,
    };
    assert_eq!(emit_report(&unknown), "member over Z\nstatus: Unknown\ncap: 2\nescalation: 1, 2\n");
    let syz = Response {
        json: json!({ "command": "syz", "ring": "Q", "status": "ok", "cap": "4", "completeness": "bound", "generators": [["-Y", "X"]] }),
        exit_code: 0,
        text: None,
    };
    assert_eq!(emit_report(&syz), "syz over Q\ngenerators (cap 4, bound):\n  [-Y, X]\n");
}

#[test]
fn requests_run_in_process() {
    let req = Request::new(Command::Member, DomainDescriptor::Integers, &["X"], &["1", "1 - 2*X", "4*X"]);
    let resp = run(&req).unwrap();
    assert_eq!(resp.exit_code, 0);
    assert_eq!(resp.json["status"], "Member");
    let bad = Request::new(Command::Member, DomainDescriptor::Integers, &["X"], &["1", "W"]);
    assert!(run(&bad).is_err());
}
