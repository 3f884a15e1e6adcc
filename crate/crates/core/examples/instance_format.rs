//! The JSON instance format: parsing, validation errors, canonical output,
//! hashing, and machine-readable run reports.

use gradlab::instance::{parse_instance, parse_instances};
use gradlab::runner::{Command, Mode, RunReport, Runner};

const C2: &str = r#"{"kind":"graded_algebra","p":2,"dim":2,
    "mul":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
    "semigroup":{"n":2,"table":[[0,1],[1,0]],"zero":null},
    "deg":[0,1],"meta":{"name":"gf2-c2"}}"#;

fn main() -> gradlab::Result<()> {
    let doc = parse_instance(C2)?;
    println!("canonical: {}", doc.to_canonical_json());
    println!("sha256: {}", doc.hash());

    let report = Runner::default().run(Command::Check(Mode::Both), &doc);
    let line = report.to_json();
    println!("report: {line}");
    assert_eq!(RunReport::from_json(&line)?, report);

    let broken = r#"{"kind":"semigroup","semigroup":{"n":2,"table":[[0,1],[0,0]]}}"#;
    println!("invalid table: {}", parse_instance(broken).unwrap_err());
    let stream = format!("{C2}\n[{C2},{C2}]");
    println!("documents in stream: {}", parse_instances(&stream)?.len());
    Ok(())
}
