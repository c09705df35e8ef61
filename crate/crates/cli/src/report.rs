use boolinv::{all_hold, Condition};
use serde::Serialize;
use serde_json::{Map, Value};

/// Everything a command prints: echoed inputs, the seed, results and the
/// postconditions that were checked.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub seed: u64,
    pub inputs: Map<String, Value>,
    #[serde(flatten)]
    pub results: Map<String, Value>,
    pub checks: Vec<Condition>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Self {
            command: command.into(),
            instance: None,
            seed,
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn instance(mut self, name: impl Into<String>) -> Self {
        self.instance = Some(name.into());
        self
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.to_string(), to_value(value));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), to_value(value));
    }

    pub fn check(&mut self, condition: Condition) {
        self.checks.push(condition);
    }

    pub fn extend_checks(&mut self, conditions: impl IntoIterator<Item = Condition>) {
        self.checks.extend(conditions);
    }

    pub fn passed(&self) -> bool {
        all_hold(&self.checks)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
            out.push('\n');
            return out;
        }
        let mut rows = vec![("command".to_string(), self.command.clone())];
        if let Some(name) = &self.instance {
            rows.push(("instance".into(), name.clone()));
        }
        rows.push(("seed".into(), self.seed.to_string()));
        for (k, v) in &self.inputs {
            flatten(k, v, &mut rows);
        }
        for (k, v) in &self.results {
            flatten(k, v, &mut rows);
        }
        let width = rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.holds).count();
            out.push_str(&format!(
                "{:<width$}  {passed}/{} passed\n",
                "checks",
                self.checks.len()
            ));
            for c in &self.checks {
                let mark = if c.holds { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => out.push_str(&format!("  {mark}  {} [{d}]\n", c.name)),
                    None => out.push_str(&format!("  {mark}  {}\n", c.name)),
                }
            }
        }
        out
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("values serialize")
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

fn flatten(key: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(value) {
        rows.push((key.to_string(), s));
        return;
    }
    match value {
        Value::Array(items) if items.iter().all(|v| scalar(v).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            rows.push((key.to_string(), parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{key}[{i}]"), v, rows);
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{key}.{k}"), v, rows);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
