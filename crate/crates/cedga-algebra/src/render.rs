use std::fmt::Write as _;

use cedga_coeff::Coeff;

use crate::{Element, Presentation, Word};

impl Presentation {
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_idempotent() {
            return self.idempotent_label(w.source()).to_string();
        }
        let names: Vec<&str> = w.letters().iter().map(|g| self.generator(*g).name.as_str()).collect();
        names.join("*")
    }

    /// Text form used by the DSL: `e1 - 2/3*c0_23*c0_12 + (mu - lam*mu)*p`.
    pub fn render(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in x.terms().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            write_term(&mut out, &mag, &self.render_word(w));
        }
        out
    }
}

fn write_term(out: &mut String, c: &Coeff, word: &str) {
    if c.is_one() {
        out.push_str(word);
    } else if c.needs_parens() {
        let _ = write!(out, "({c})*{word}");
    } else {
        let _ = write!(out, "{c}*{word}");
    }
}
