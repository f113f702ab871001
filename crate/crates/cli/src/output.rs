use crate::Format;

/// Ordered key/value output. Metadata only appears in structured form.
pub struct Report {
    format: Format,
    fields: Vec<(String, String, bool)>,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report { format, fields: Vec::new() }
    }

    pub fn meta(&mut self, key: &str, value: String) {
        self.fields.push((key.to_string(), value, false));
    }

    pub fn value(&mut self, key: &str, value: String) {
        self.fields.push((key.to_string(), value, true));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        match self.format {
            Format::Structured => {
                for (k, v, _) in &self.fields {
                    out += &format!("{k}={v}\n");
                }
            }
            Format::Text => {
                let shown: Vec<_> = self.fields.iter().filter(|f| f.2).collect();
                if let [(_, v, _)] = shown.as_slice() {
                    out += &format!("{v}\n");
                } else {
                    for (k, v, _) in shown {
                        out += &format!("{k}: {v}\n");
                    }
                }
            }
        }
        out
    }

    pub fn print(&self) {
        print!("{}", self.render());
    }
}
