//! The batch commands behind each subcommand.
//!
//! Each command returns a [`CommandResult`]: a JSON payload for machines and
//! a text rendering for people. Commands never print; `main` decides where
//! things go.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qdiscover::cfrac::{self, GOLDEN_MEAN};
use qdiscover::dirichlet::{self, DirichletSeries};
use qdiscover::prodmake::{self, conjecture_product, detect_progressions, expand_product};
use qdiscover::{Identity, ProductForm, QSeries, ResiduePattern};
use serde_json::{json, Value};

use crate::json::{pattern_to_json, product_form_to_json, qseries_to_json, zpoly_to_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }

    /// 0 for ok, 1 for a mismatch, 2 for bad input.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }
}

/// First coefficient where two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub left: BigInt,
    pub right: BigInt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub command: &'static str,
    pub order: usize,
    /// Highest order through which agreement was confirmed, if any.
    pub verified_to: Option<usize>,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
    pub payload: Value,
    pub text: String,
}

impl CommandResult {
    pub fn error(command: &'static str, order: usize, message: &str) -> Self {
        CommandResult {
            command,
            order,
            verified_to: None,
            status: Status::Error,
            mismatch: None,
            payload: json!({ "message": message }),
            text: format!("error: {message}"),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "order": self.order,
            "verified_to": self.verified_to,
            "status": self.status.as_str(),
            "payload": self.payload,
        });
        if let Some(m) = &self.mismatch {
            v["mismatch"] = json!({
                "index": m.index,
                "left": m.left.to_string(),
                "right": m.right.to_string(),
            });
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandError(pub String);

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CommandError {}

impl From<qdiscover::Error> for CommandError {
    fn from(e: qdiscover::Error) -> Self {
        CommandError(e.to_string())
    }
}

pub type CmdResult = Result<CommandResult, CommandError>;

pub fn identity_name(id: Identity) -> &'static str {
    match id {
        Identity::First => "rr1",
        Identity::Second => "rr2",
    }
}

/// Compares two series coefficient by coefficient.
fn compare(left: &QSeries, right: &QSeries) -> (Option<usize>, Option<Mismatch>) {
    match left.first_difference(right) {
        None => (Some(left.order()), None),
        Some(index) => (
            index.checked_sub(1),
            Some(Mismatch {
                index,
                left: left.coeffs()[index].clone(),
                right: right.coeffs()[index].clone(),
            }),
        ),
    }
}

/// Checks a sum side against a product pattern through `order`. With no
/// pattern given, the identity's own product side is used.
pub fn cmd_verify(id: Identity, order: usize, pattern: Option<ResiduePattern>) -> CmdResult {
    let pattern = pattern.unwrap_or_else(|| id.product_pattern());
    let sum = id.sum_side(order);
    let product = expand_product(&pattern.product_form(order), order);
    let (verified_to, mismatch) = compare(&sum, &product);
    let status = if mismatch.is_some() {
        Status::Mismatch
    } else {
        Status::Ok
    };

    let mut text = String::new();
    let name = identity_name(id);
    match &mismatch {
        None => writeln!(text, "{name}: sum side = {pattern} through q^{order}").unwrap(),
        Some(m) => writeln!(
            text,
            "{name}: sum side != {pattern}: coefficient of q^{} is {} vs {}",
            m.index, m.left, m.right
        )
        .unwrap(),
    }
    writeln!(text, "  sum:     {}", leading(&sum, 12)).unwrap();
    writeln!(text, "  product: {}", leading(&product, 12)).unwrap();

    Ok(CommandResult {
        command: "verify",
        order,
        verified_to,
        status,
        mismatch,
        payload: json!({
            "identity": name,
            "pattern": pattern_to_json(&pattern),
            "sum": qseries_to_json(&sum),
            "product": qseries_to_json(&product),
        }),
        text,
    })
}

/// Where the series for `cmd_discover` comes from.
#[derive(Debug, Clone)]
pub enum DiscoverSource {
    Identity(Identity),
    Series(QSeries),
}

/// Strips the series to a product, then looks for a residue pattern.
pub fn cmd_discover(source: DiscoverSource, order: usize, max_modulus: usize) -> CmdResult {
    if order < 1 {
        return Err(CommandError("discover needs order >= 1".into()));
    }
    let (label, series) = match source {
        DiscoverSource::Identity(id) => (identity_name(id).to_string(), id.sum_side(order)),
        DiscoverSource::Series(s) => {
            let s = if s.order() > order {
                s.truncate(order)?
            } else {
                s
            };
            ("input".to_string(), s)
        }
    };
    let order = series.order();
    let product = conjecture_product(&series)?;
    let (verified_to, mismatch) = compare(&series, &expand_product(&product, order));
    let pattern = detect_progressions(&product, max_modulus);

    let mut text = String::new();
    writeln!(text, "{label}: {}", leading(&series, 12)).unwrap();
    writeln!(text, "stripped product: {product}").unwrap();
    match &pattern {
        Some(p) => writeln!(
            text,
            "conjecture (checked through q^{order}): {label} = {p}"
        )
        .unwrap(),
        None => writeln!(
            text,
            "no residue pattern with modulus <= {max_modulus} fits the exponents"
        )
        .unwrap(),
    }

    Ok(CommandResult {
        command: "discover",
        order,
        verified_to,
        status: if mismatch.is_some() {
            Status::Mismatch
        } else {
            Status::Ok
        },
        mismatch,
        payload: json!({
            "source": label,
            "kind": "conjecture",
            "checked_to": order,
            "max_modulus": max_modulus,
            "product": product_form_to_json(&product),
            "pattern": pattern.as_ref().map(pattern_to_json),
        }),
        text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfracTarget {
    Golden,
    RogersRamanujan,
}

pub fn cmd_cfrac(target: CfracTarget, steps: usize, order: usize) -> CmdResult {
    if steps < 1 {
        return Err(CommandError("cfrac needs at least one step".into()));
    }
    match target {
        CfracTarget::Golden => golden_table(steps),
        CfracTarget::RogersRamanujan => rr_table(steps, order),
    }
}

fn golden_table(steps: usize) -> CmdResult {
    let mut rows = Vec::new();
    let mut text = String::from("n  convergent  value\n");
    for n in 1..=steps {
        let w = cfrac::golden_convergent(n)?;
        let value = w.to_f64().unwrap_or(f64::NAN);
        writeln!(text, "{n}  {}/{}  {value:.10}", w.numer(), w.denom()).unwrap();
        rows.push(json!({
            "n": n,
            "numerator": w.numer().to_string(),
            "denominator": w.denom().to_string(),
            "value": format!("{value:.10}"),
        }));
    }
    let err = cfrac::golden_error(steps)?;
    writeln!(text, "|w_{steps} - {GOLDEN_MEAN:.10}| = {err:.3e}").unwrap();
    Ok(CommandResult {
        command: "cfrac",
        order: steps,
        verified_to: None,
        status: Status::Ok,
        mismatch: None,
        payload: json!({
            "target": "golden",
            "convergents": rows,
            "golden_error": format!("{err:.6e}"),
        }),
        text,
    })
}

fn rr_table(steps: usize, order: usize) -> CmdResult {
    let series = cfrac::cfrac_series(order);
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut last_agreement = None;
    for n in 1..=steps {
        let c = cfrac::rr_convergent(n, order)?;
        let agree = match c.series().first_difference(&series) {
            None => order,
            Some(k) => k - 1,
        };
        last_agreement = Some(agree);
        writeln!(text, "c_{n}(z,q) = ({}) / ({})", c.numerator, c.denominator).unwrap();
        writeln!(text, "  agrees with c(1,q) through q^{agree}").unwrap();
        rows.push(json!({
            "n": n,
            "numerator": zpoly_to_json(&c.numerator),
            "denominator": zpoly_to_json(&c.denominator),
            "numerator_text": c.numerator.to_string(),
            "denominator_text": c.denominator.to_string(),
            "agrees_to": agree,
        }));
    }
    writeln!(text, "c(1,q) = {}", leading(&series, 12)).unwrap();
    Ok(CommandResult {
        command: "cfrac",
        order,
        verified_to: last_agreement,
        status: Status::Ok,
        mismatch: None,
        payload: json!({
            "target": "rr",
            "convergents": rows,
            "series": qseries_to_json(&series),
        }),
        text,
    })
}

pub fn cmd_zeta(limit: usize) -> CmdResult {
    let steps = dirichlet::zeta_series(limit)?.strip_all()?;
    let primes: Vec<usize> = steps.iter().map(|(n, _)| *n).collect();
    let list = primes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    // every strip should have used multiplicity 1 and left the identity
    let mut residual = dirichlet::zeta_series(limit)?;
    for &p in &primes {
        residual.mul_one_minus_index_pow(p, &BigInt::from(1))?;
    }
    let clean = residual == DirichletSeries::identity(limit)?;
    let text = format!("zeta(s) = prod over p in {{{list}}} of 1/(1 - p^(-s))\n");
    Ok(CommandResult {
        command: "zeta",
        order: limit,
        verified_to: clean.then_some(limit),
        status: if clean { Status::Ok } else { Status::Mismatch },
        mismatch: None,
        payload: json!({ "indices": primes }),
        text,
    })
}

/// `q^{k^2+tk}/((1-q)...(1-q^k))` written out.
fn sum_term_text(k: usize, t: usize) -> String {
    let p = k * k + t * k;
    let num = match p {
        0 => "1".to_string(),
        1 => "q".to_string(),
        _ => format!("q^{p}"),
    };
    if k == 0 {
        return num;
    }
    let den: String = (1..=k)
        .map(|j| {
            if j == 1 {
                "(1-q)".to_string()
            } else {
                format!("(1-q^{j})")
            }
        })
        .collect();
    if k == 1 {
        format!("{num}/{den}")
    } else {
        format!("{num}/({den})")
    }
}

pub fn cmd_sum(id: Identity, order: usize) -> CmdResult {
    let t = id.shift();
    let series = id.sum_side(order);
    let terms: Vec<String> = (0..5).map(|k| sum_term_text(k, t)).collect();
    let text = format!(
        "{} + ...\n  = {}\n",
        terms.join(" + "),
        leading(&series, 12)
    );
    Ok(CommandResult {
        command: "sum",
        order,
        verified_to: None,
        status: Status::Ok,
        mismatch: None,
        payload: json!({
            "identity": identity_name(id),
            "terms": terms,
            "series": qseries_to_json(&series),
        }),
        text,
    })
}

/// Where the factors for `cmd_product` come from.
#[derive(Debug, Clone)]
pub enum ProductSource {
    Pattern(ResiduePattern),
    Factors(ProductForm),
}

pub fn cmd_product(source: ProductSource, order: usize) -> CmdResult {
    let (pf, described, pattern) = match source {
        ProductSource::Pattern(p) => (p.product_form(order), p.to_string(), Some(p)),
        ProductSource::Factors(pf) => {
            let s = pf.to_string();
            (pf, s, None)
        }
    };
    let series = prodmake::expand_product(&pf, order);
    let text = format!("{described}\n  = {}\n", leading(&series, 12));
    Ok(CommandResult {
        command: "product",
        order,
        verified_to: None,
        status: Status::Ok,
        mismatch: None,
        payload: json!({
            "pattern": pattern.as_ref().map(pattern_to_json),
            "product": product_form_to_json(&pf),
            "series": qseries_to_json(&series),
        }),
        text,
    })
}

/// The series up to `q^terms` followed by `+ ...` when more is known.
fn leading(s: &QSeries, terms: usize) -> String {
    if s.order() <= terms {
        return s.to_string();
    }
    let head = s.truncate(terms).expect("terms < order");
    match head.to_string().as_str() {
        "0" => "0 + ...".to_string(),
        h => format!("{h} + ..."),
    }
}
