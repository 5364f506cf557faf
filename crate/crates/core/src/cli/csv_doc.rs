//! CSV documents: `#` metadata comments, a header row, and numeric rows
//! written with 17 significant digits.

use crate::cli::CliError;

pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Default)]
pub struct CsvDoc {
    buf: Vec<u8>,
}

impl CsvDoc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, text: impl AsRef<str>) {
        for line in text.as_ref().lines() {
            self.buf.extend_from_slice(b"# ");
            self.buf.extend_from_slice(line.as_bytes());
            self.buf.push(b'\n');
        }
    }

    pub fn table<I>(&mut self, header: &[String], rows: I) -> Result<(), CliError>
    where
        I: IntoIterator<Item = Vec<String>>,
    {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut self.buf);
        w.write_record(header)?;
        for row in rows {
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.buf
    }

    pub fn into_string(self) -> String {
        String::from_utf8(self.buf).expect("csv output is ascii")
    }
}
