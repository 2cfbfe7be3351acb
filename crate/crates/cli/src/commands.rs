//! Command implementations. Each returns its rendered output so the binary
//! only has to route it to a file or stdout.

use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use lampart_core::{
    direct_rho, direct_rho_sequence, genfun_rho, list_lambda, QExpression, RhoVariant,
};
use lampart_core::{verify as verify_variant, VerificationReport};

use crate::bfile::BFile;
use crate::compare::compare_bfile;
use crate::remark;
use crate::render::{self, Format, TableRow};

pub const DEFAULT_VERIFY_ORDER: usize = 200;

/// What `expand` prints: a family's generating function or a bare
/// q-expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Variant(RhoVariant),
    Expression(QExpression),
}

impl FromStr for Target {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(v) = s.parse::<RhoVariant>() {
            return Ok(Self::Variant(v));
        }
        match s.parse::<QExpression>() {
            Ok(e) => Ok(Self::Expression(e)),
            Err(e) => bail!(
                "{s:?} is neither a variant (PLAIN, DISTINCT, ODD, ODD_DISTINCT, MOD3, MOD6) \
                 nor a q-expression: {e}"
            ),
        }
    }
}

pub fn expand(target: &str, order: usize, format: Format) -> Result<String> {
    let (name, expression, series) = match target.parse::<Target>()? {
        Target::Variant(v) => (
            v.name().to_string(),
            v.recipe().to_string(),
            genfun_rho(v, order)?,
        ),
        Target::Expression(e) => (target.to_string(), e.to_string(), e.expand(order)?),
    };
    Ok(render::coefficients(
        &name,
        &expression,
        series.coeffs(),
        format,
    ))
}

/// Rendered report plus whether every coefficient agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

pub fn parse_selection(selection: &str) -> Result<Vec<RhoVariant>> {
    if selection.eq_ignore_ascii_case("all") {
        Ok(RhoVariant::ALL.to_vec())
    } else {
        Ok(vec![selection.parse()?])
    }
}

pub fn verify(selection: &str, order: usize, format: Format) -> Result<Output> {
    let reports = parse_selection(selection)?
        .into_iter()
        .map(|v| verify_variant(v, order))
        .collect::<lampart_core::Result<Vec<_>>>()?;
    Ok(verification_output(&reports, format))
}

pub fn verification_output(reports: &[VerificationReport], format: Format) -> Output {
    Output {
        text: render::verification(reports, format),
        success: reports.iter().all(VerificationReport::all_equal),
    }
}

pub fn table_rows(n: usize) -> Result<Vec<TableRow>> {
    if n % 2 == 1 {
        bail!("n must be even, got {n}");
    }
    RhoVariant::ALL
        .into_iter()
        .map(|v| {
            let partitions = list_lambda(v, n)?;
            let value = direct_rho(v, n);
            debug_assert_eq!(num_bigint::BigInt::from(partitions.len()), value);
            let note = (v == RhoVariant::OddDistinct && (n == 8 || n == 10)).then(|| {
                format!(
                    "the published table prints rho_od(10)=2 beside 4+3+1, which is a partition \
                     of 8; computed: rho_od(8)={}, rho_od(10)={}",
                    direct_rho(v, 8),
                    direct_rho(v, 10)
                )
            });
            Ok(TableRow {
                variant: v.name(),
                label: format!("{}({n})", v.symbol()),
                value,
                oeis: v.oeis_id(),
                partitions: partitions.iter().map(ToString::to_string).collect(),
                note,
            })
        })
        .collect()
}

pub fn table(n: usize, format: Format) -> Result<String> {
    Ok(render::table(n, &table_rows(n)?, format))
}

pub fn remark_check(order: usize, format: Format) -> Result<String> {
    Ok(render::comparisons(&remark::remark_check(order)?, format))
}

/// How b-file indices map onto exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum IndexMode {
    /// index k holds the coefficient of q^k
    #[default]
    N,
    /// index k holds the coefficient of q^(2k)
    Half,
}

pub fn bfile_export(variant: RhoVariant, order: usize, index: IndexMode) -> BFile {
    let seq = direct_rho_sequence(variant, order);
    let values = match index {
        IndexMode::N => seq,
        IndexMode::Half => seq.into_iter().step_by(2).collect(),
    };
    BFile::new(0, values)
}

pub fn bfile_compare(
    variant: RhoVariant,
    path: &Path,
    order: Option<usize>,
    format: Format,
) -> Result<String> {
    let bfile = BFile::read(path)?;
    let last = bfile.index_of(bfile.values.len() - 1).max(0) as usize;
    let order = order.unwrap_or(2 * last);
    let computed = genfun_rho(variant, order)
        .with_context(|| format!("expanding {variant} to order {order}"))?
        .into_coeffs();
    let source = format!("{} coefficients of {}", variant.symbol(), variant.recipe());
    let cmp = compare_bfile(
        format!("{} vs {}", path.display(), variant),
        &source,
        &bfile,
        &computed,
    );
    Ok(render::comparisons(&[cmp], format))
}
