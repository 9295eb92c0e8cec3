use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Pretty JSON; objects come out with sorted keys.
pub fn json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// One `key: value` line per top-level field, nested values in compact JSON.
pub fn table(value: &Value) -> String {
    let Some(map) = value.as_object() else {
        return format!("{}\n", scalar(value));
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(k, v)| match v {
            Value::Object(inner) => {
                let mut block = format!("{k}:\n");
                for (ik, iv) in inner {
                    block.push_str(&format!("  {ik}: {}\n", scalar(iv)));
                }
                block
            }
            _ => format!("{k:<width$}  {}\n", scalar(v)),
        })
        .collect()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_string) => {
            items.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

pub fn emit(format: Format, value: &Value) -> String {
    match format {
        Format::Json => json(value),
        Format::Table => table(value),
    }
}

/// Shifts per homological step, in the `S(-j)^m` notation.
pub fn steps(steps: &[Vec<usize>]) -> String {
    steps
        .iter()
        .enumerate()
        .map(|(i, degrees)| {
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &d in degrees {
                match runs.last_mut() {
                    Some((last, m)) if *last == d => *m += 1,
                    _ => runs.push((d, 1)),
                }
            }
            let terms: Vec<String> = runs
                .into_iter()
                .map(|(d, m)| if m == 1 { format!("S(-{d})") } else { format!("S(-{d})^{m}") })
                .collect();
            format!("{i}: {}\n", terms.join(" + "))
        })
        .collect()
}
