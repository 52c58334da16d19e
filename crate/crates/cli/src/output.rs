//! Text and JSON rendering.

use serde::Serialize;
use serde_json::json;

use g2skein::exactalg::RatFunc;
use g2skein::opexpr::label;
use g2skein::skeinmod::SkeinVector;

use crate::suites::SuiteRun;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

pub fn vector(fmt: Format, v: &SkeinVector<RatFunc>) {
    match fmt {
        Format::Json => print_json(v),
        Format::Text if v.entries.is_empty() => println!("0"),
        Format::Text => {
            for (key, c) in &v.entries {
                println!("({c}) {}", label(v.basis, *key));
            }
        }
    }
}

pub fn scalar(fmt: Format, expr: &str, value: &RatFunc) {
    match fmt {
        Format::Json => print_json(&json!({"expr": expr, "value": value, "text": value.to_string()})),
        Format::Text => println!("{value}"),
    }
}

pub fn suite(fmt: Format, run: &SuiteRun) {
    match fmt {
        Format::Json => print_json(run),
        Format::Text => {
            for r in &run.identities {
                println!("{}", r.summary());
                for f in &r.failures {
                    println!("    {}: {} vs {}", f.key, f.lhs, f.rhs);
                }
                for n in &r.notes {
                    println!("    note: {n}");
                }
            }
            let passed = run.identities.iter().filter(|r| r.passed()).count();
            let status = if run.passed() { "PASS" } else { "FAIL" };
            println!("{status} {}: {passed}/{} identities passed", run.suite, run.identities.len());
        }
    }
}
