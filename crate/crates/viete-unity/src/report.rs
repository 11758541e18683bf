//! Convergence tables, series data, the naive-vs-stable precision study,
//! and machine-readable emission (CSV, TSV, markdown pipe tables).

use crate::error::{Error, Result};
use crate::estimators::PiEstimate;
use crate::precision::{BigReal, PrecisionContext, RenderMode};
use crate::sequence::{EvalMode, SequenceState};

/// One convergence-table row: truncated digit strings for `c_k` and
/// `eps_k`, plus the scaled error `2^{k+1} eps_k`.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub k: u32,
    pub c_str: String,
    pub eps_str: String,
    pub scaled_eps: BigReal,
}

/// One series point for the evolution of `a_k`, `b_k`, `c_k`.
#[derive(Clone, Debug)]
pub struct SeriesPoint {
    pub k: u32,
    pub a: BigReal,
    pub b: BigReal,
    pub c: BigReal,
}

/// One precision-study row: relative errors of naive and stable `b_k`
/// against an oracle computed at four times the working precision.
#[derive(Clone, Debug)]
pub struct StudyRow {
    pub k: u32,
    pub precision_bits: u32,
    pub rel_err_naive: BigReal,
    pub rel_err_stable: BigReal,
}

/// Plain-text emission formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Tsv,
    Markdown,
}

/// A record [`emit`] can serialize.
pub trait ReportRow {
    fn header() -> &'static [&'static str];
    fn cells(&self, digits: usize, ctx: &PrecisionContext) -> Result<Vec<String>>;
}

impl ReportRow for ConvergenceRow {
    fn header() -> &'static [&'static str] {
        &["k", "c_k", "eps_k", "scaled_eps"]
    }

    fn cells(&self, digits: usize, ctx: &PrecisionContext) -> Result<Vec<String>> {
        Ok(vec![
            self.k.to_string(),
            self.c_str.clone(),
            self.eps_str.clone(),
            self.scaled_eps.to_decimal(digits, RenderMode::Truncate, ctx)?,
        ])
    }
}

impl ReportRow for SeriesPoint {
    fn header() -> &'static [&'static str] {
        &["k", "a", "b", "c"]
    }

    fn cells(&self, digits: usize, ctx: &PrecisionContext) -> Result<Vec<String>> {
        Ok(vec![
            self.k.to_string(),
            self.a.to_decimal(digits, RenderMode::Truncate, ctx)?,
            self.b.to_decimal(digits, RenderMode::Truncate, ctx)?,
            self.c.to_decimal(digits, RenderMode::Truncate, ctx)?,
        ])
    }
}

impl ReportRow for StudyRow {
    fn header() -> &'static [&'static str] {
        &["k", "precision_bits", "rel_err_naive", "rel_err_stable"]
    }

    fn cells(&self, _digits: usize, _ctx: &PrecisionContext) -> Result<Vec<String>> {
        Ok(vec![
            self.k.to_string(),
            self.precision_bits.to_string(),
            self.rel_err_naive.to_scientific(6),
            self.rel_err_stable.to_scientific(6),
        ])
    }
}

impl ReportRow for PiEstimate {
    fn header() -> &'static [&'static str] {
        &["method", "k", "m", "value", "abs_error"]
    }

    fn cells(&self, digits: usize, ctx: &PrecisionContext) -> Result<Vec<String>> {
        Ok(vec![
            self.method.label().to_string(),
            self.depth.to_string(),
            self.power.to_string(),
            self.value.to_decimal(digits, RenderMode::Truncate, ctx)?,
            self.abs_error.to_scientific(6),
        ])
    }
}

/// Convergence rows for `k_min..=k_max`, truncated to `digits` fractional
/// digits.
pub fn table1(
    k_min: u32,
    k_max: u32,
    digits: usize,
    ctx: &PrecisionContext,
    mode: EvalMode,
) -> Result<Vec<ConvergenceRow>> {
    assert!(k_min >= 1, "k_min must be positive");
    assert!(k_max >= k_min, "k_max must be at least k_min");
    let mut rows = Vec::with_capacity((k_max - k_min + 1) as usize);
    let mut state = SequenceState::initial(ctx);
    loop {
        if state.k >= k_min {
            rows.push(ConvergenceRow {
                k: state.k,
                c_str: state.c.to_decimal(digits, RenderMode::Truncate, ctx)?,
                eps_str: state.eps.to_decimal(digits, RenderMode::Truncate, ctx)?,
                scaled_eps: state.eps.mul_pow2(i64::from(state.k) + 1),
            });
        }
        if state.k == k_max {
            break;
        }
        state = state.advance(ctx, mode)?;
    }
    Ok(rows)
}

/// Series points for `k = 1..=count`.
pub fn figure1_series(count: u32, ctx: &PrecisionContext, mode: EvalMode) -> Vec<SeriesPoint> {
    assert!(count >= 1, "count must be positive");
    let mut points = Vec::with_capacity(count as usize);
    let mut state = SequenceState::initial(ctx);
    loop {
        points.push(SeriesPoint {
            k: state.k,
            a: state.a.clone(),
            b: state.b.clone(),
            c: state.c.clone(),
        });
        if state.k == count {
            break;
        }
        state = state
            .advance(ctx, mode)
            .expect("pole unreachable from the initial state");
    }
    points
}

/// Relative errors of naive and stable `b_k` for every `k <= count` and
/// every requested precision, each against a stable chain run at four times
/// that precision.
pub fn precision_study(count: u32, bits_list: &[u32]) -> Result<Vec<StudyRow>> {
    assert!(count >= 1, "count must be positive");
    let mut rows = Vec::with_capacity(bits_list.len() * count as usize);
    for &bits in bits_list {
        let ctx = PrecisionContext::new(bits)?;
        let oracle_ctx = PrecisionContext::new(bits.saturating_mul(4))?;
        let mut naive = SequenceState::initial(&ctx);
        let mut stable = SequenceState::initial(&ctx);
        let mut oracle = SequenceState::initial(&oracle_ctx);
        loop {
            let rel = |x: &BigReal| -> BigReal {
                x.sub(&oracle.b, &oracle_ctx)
                    .abs()
                    .div(&oracle.b, &oracle_ctx)
                    .expect("oracle b is positive")
            };
            rows.push(StudyRow {
                k: oracle.k,
                precision_bits: bits,
                rel_err_naive: rel(&naive.b),
                rel_err_stable: rel(&stable.b),
            });
            if oracle.k == count {
                break;
            }
            naive = naive.advance(&ctx, EvalMode::Naive)?;
            stable = stable.advance(&ctx, EvalMode::Stable)?;
            oracle = oracle.advance(&oracle_ctx, EvalMode::Stable)?;
        }
    }
    Ok(rows)
}

/// Serialize rows with a header line. CSV and TSV end every line with LF;
/// markdown renders a GitHub pipe table.
pub fn emit<R: ReportRow>(
    rows: &[R],
    format: OutputFormat,
    digits: usize,
    ctx: &PrecisionContext,
) -> Result<String> {
    let header: Vec<String> = R::header().iter().map(|s| s.to_string()).collect();
    let mut body = Vec::with_capacity(rows.len());
    for row in rows {
        body.push(row.cells(digits, ctx)?);
    }
    let mut out = String::new();
    match format {
        OutputFormat::Csv | OutputFormat::Tsv => {
            let sep = if format == OutputFormat::Csv { "," } else { "\t" };
            out.push_str(&header.join(sep));
            out.push('\n');
            for cells in &body {
                out.push_str(&cells.join(sep));
                out.push('\n');
            }
        }
        OutputFormat::Markdown => {
            out.push_str("| ");
            out.push_str(&header.join(" | "));
            out.push_str(" |\n|");
            for _ in &header {
                out.push_str(" --- |");
            }
            out.push('\n');
            for cells in &body {
                out.push_str("| ");
                out.push_str(&cells.join(" | "));
                out.push_str(" |\n");
            }
        }
    }
    Ok(out)
}

/// Expression rendering is capped here: output length doubles per step.
pub const MAX_EXPRESSION_K: u32 = 8;

fn radical_expression(k: u32) -> String {
    let mut expr = "sqrt(2)".to_string();
    for _ in 1..k {
        expr = format!("sqrt(2+{expr})");
    }
    expr
}

fn b_expression(k: u32) -> String {
    format!("sqrt(2-{})/{}", radical_expression(k), radical_expression(k + 1))
}

/// A parenthesized expression for `c_k` over the alphabet
/// `2 sqrt + - / ( )` alone.
///
/// The nesting follows the recurrence: `c_k` is assembled from `c_{k-1}`
/// and `b_k` at every level. Since the alphabet has no `1` and no `*`, the
/// composition denominator `1 - c b` is spelled `2/2 - (c)/((2/2)/(b))`.
/// Evaluating the text through [`eval_expression`] reproduces `c_k`.
pub fn render_ck_expression(k: u32) -> Result<String> {
    assert!(k >= 1, "k must be positive");
    if k > MAX_EXPRESSION_K {
        return Err(Error::ExpressionTooDeep {
            k,
            max: MAX_EXPRESSION_K,
        });
    }
    let mut expr = b_expression(1);
    for step in 2..=k {
        let b = b_expression(step);
        expr = format!("({expr}+{b})/(2/2-({expr})/((2/2)/({b})))");
    }
    Ok(expr)
}

/// Evaluate an expression over the alphabet `2 sqrt + - / ( )` at the
/// context's working precision. `+` and `-` associate left; `/` binds
/// tighter and also associates left.
pub fn eval_expression(text: &str, ctx: &PrecisionContext) -> Result<BigReal> {
    let bytes = text.as_bytes();
    let mut parser = ExprParser {
        bytes,
        pos: 0,
        ctx,
    };
    let value = parser.expression()?;
    parser.skip_whitespace();
    if parser.pos != bytes.len() {
        return Err(parser.syntax_error("trailing input"));
    }
    Ok(value)
}

struct ExprParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ctx: &'a PrecisionContext,
}

impl ExprParser<'_> {
    fn syntax_error(&self, message: &str) -> Error {
        Error::ExpressionSyntax {
            at: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_whitespace(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_whitespace();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax_error(&format!("expected {:?}", byte as char)))
        }
    }

    fn expression(&mut self) -> Result<BigReal> {
        let mut value = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    value = value.add(&rhs, self.ctx);
                }
                b'-' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    value = value.sub(&rhs, self.ctx);
                }
                _ => break,
            }
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<BigReal> {
        let mut value = self.factor()?;
        while self.peek() == Some(b'/') {
            self.pos += 1;
            let rhs = self.factor()?;
            value = value.div(&rhs, self.ctx)?;
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<BigReal> {
        match self.peek() {
            Some(b'2') => {
                self.pos += 1;
                Ok(BigReal::two())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b's') => {
                if self.bytes[self.pos..].starts_with(b"sqrt") {
                    self.pos += 4;
                    self.expect(b'(')?;
                    let inner = self.expression()?;
                    self.expect(b')')?;
                    inner.sqrt(self.ctx)
                } else {
                    Err(self.syntax_error("unknown identifier"))
                }
            }
            Some(_) => Err(self.syntax_error("unexpected character")),
            None => Err(self.syntax_error("unexpected end of input")),
        }
    }
}
