//! Rendering of solver answers as text lines and as one JSON object.

use lgp_core::{CommonAnswer, Label, LabelSyntax, LongestMatch, MsValue, RepeatAnswer, Walk};
use serde_json::{json, Map, Value};

/// Text lines plus the equivalent JSON payload. `serde_json::Map` is
/// ordered by key, which keeps the JSON output stable.
pub struct Report {
    syntax: LabelSyntax,
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(syntax: LabelSyntax, command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), command.into());
        Report { syntax, lines: Vec::new(), fields }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    pub fn labels(&self, ls: &[Label]) -> String {
        self.syntax.format_labels(ls)
    }

    pub fn label_values(&self, ls: &[Label]) -> Value {
        match self.syntax {
            LabelSyntax::Integer => ls.iter().map(|l| l.0).collect::<Vec<_>>().into(),
            LabelSyntax::Letter => ls.iter().map(|&l| self.syntax.format_label(l)).collect::<Vec<_>>().into(),
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string(&Value::Object(self.fields.clone())).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.lines.iter().map(|l| format!("{l}\n")).collect()
        }
    }

    /// `LEN`, `STRING` and up to two witness walks.
    pub fn longest_match(&mut self, m: &LongestMatch) {
        self.line(format!("LEN {}", m.length));
        self.field("kind", "finite");
        self.field("length", m.length);
        match &m.witness {
            Some(w) => {
                self.line(format!("STRING {}", self.labels(&w.string)));
                self.line(format!("WALK1 {}", w.first));
                self.line(format!("WALK2 {}", w.second));
                self.field("string", self.label_values(&w.string));
                self.field("walk1", w.first.vertices());
                self.field("walk2", w.second.vertices());
            }
            None => {
                self.line("STRING -");
                self.field("string", self.label_values(&[]));
            }
        }
    }

    pub fn occurrence(&mut self, string: &[Label], walk: &Walk) {
        self.line(format!("LEN {}", string.len()));
        self.line(format!("STRING {}", self.labels(string)));
        self.line(format!("WALK1 {walk}"));
        self.field("match", true);
        self.field("length", string.len());
        self.field("string", self.label_values(string));
        self.field("walk1", walk.vertices());
    }

    pub fn no_match(&mut self) {
        self.line("NO-MATCH");
        self.field("match", false);
    }

    fn periodic(&mut self, token: &str, r: &[Label], s: &[Label]) {
        self.line(format!("{token} R={} S={}", self.labels(r), self.labels(s)));
        self.field("kind", token.to_ascii_lowercase());
        self.field("r", self.label_values(r));
        self.field("s", self.label_values(s));
    }

    pub fn repeat(&mut self, ans: &RepeatAnswer) {
        match ans {
            RepeatAnswer::Finite(m) => self.longest_match(m),
            RepeatAnswer::Unbounded { period, tail } => self.periodic("UNBOUNDED", period, tail),
            RepeatAnswer::Infinite { prefix, period } => self.periodic("INFINITE", prefix, period),
        }
    }

    pub fn common(&mut self, ans: &CommonAnswer) {
        match ans {
            CommonAnswer::Finite(m) => self.longest_match(m),
            CommonAnswer::Infinite { period, first, second } => {
                self.periodic("INFINITE", &[], period);
                self.line(format!("WALK1 {first}"));
                self.line(format!("WALK2 {second}"));
                self.field("walk1", first.vertices());
                self.field("walk2", second.vertices());
            }
        }
    }

    pub fn matching_statistics(&mut self, values: &[(usize, MsValue)]) {
        let mut obj = Vec::with_capacity(values.len());
        for &(v, value) in values {
            self.line(format!("MS {v} {value}"));
            obj.push(json!({ "vertex": v, "value": ms_json(value) }));
        }
        self.field("ms", obj);
    }
}

fn ms_json(v: MsValue) -> Value {
    match v {
        MsValue::Finite(k) => k.into(),
        MsValue::Infinite => "inf".into(),
    }
}
