//! `gkmin compute`: one object per invocation, compact JSON with sorted keys.

use clap::{Subcommand, ValueEnum};
use gkmin::coherent::{
    basis_labels, composition_series, psi_labels, transition_psi_to_psibar, transition_psibar_to_psi, BasisLabel,
    PsiLabel,
};
use gkmin::dyckpar::{parabolic_kl_minus, parabolic_kl_q};
use gkmin::langlands::{gk_dim_class, singular_indices, singular_point, LanglandsParameter};
use gkmin::rational::Rational;
use gkmin::symgroup::v_cycle;
use gkmin::tableaux::rs;
use gkmin::weights::{bernstein_c, dim_f, is_dominant, is_regular, WeightVector};
use gkmin::{json, Error, IntMatrix, KlOracle, Permutation, QPoly, Result};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::Format;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParabolicKind {
    /// Brenti's closed form for the `q` type.
    Q,
    /// The `-1` type, through the ordinary KL oracle.
    Minus1,
}

#[derive(Subcommand)]
pub enum Object {
    /// Kazhdan-Lusztig polynomial P_{u,v}.
    Kl {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        v: Permutation,
    },
    /// Parabolic KL polynomial for minimal coset representatives u, v of S_{n-1} \ S_n.
    ParabolicKl {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        v: Permutation,
        #[arg(long, value_enum, default_value_t = ParabolicKind::Q)]
        kind: ParabolicKind,
    },
    /// Robinson-Schensted insertion and recording tableaux.
    Rs {
        #[arg(long)]
        perm: Permutation,
    },
    /// Transition matrix between the two coherent-family bases.
    Transition {
        #[arg(long)]
        n: usize,
        /// Print the inverse direction (reference basis in terms of induced families).
        #[arg(long)]
        inverse: bool,
    },
    /// Bernstein degrees c_{v_{k,l}}(λ) and dimensions dim F_{i,j}.
    Bernstein {
        /// `a_1,..,a_n|b_1,..,b_n`, or 2n comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Gelfand-Kirillov dimension class of a Langlands parameter.
    Classify {
        /// Semicolon-separated `a:b` pairs, e.g. `2:1;1:2;0:0`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: LanglandsParameter,
    },
    /// The singular weight and parameter attached to i != j.
    Singular {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
    },
    /// Composition factors of the module induced at λ_{i,j}.
    Composition {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

fn poly_json(p: &QPoly) -> Value {
    json!({"coeffs": p.to_json(), "poly": p.to_string(), "at_one": json::int(&p.eval_at_one())})
}

fn psi_name(l: &PsiLabel) -> String {
    match l {
        PsiLabel::Psi(k, l) => format!("Psi({k},{l})"),
        PsiLabel::Triv => "Triv".into(),
    }
}

fn basis_name(l: &BasisLabel) -> String {
    match l {
        BasisLabel::Vbar(k, l) => format!("Vbar({k},{l})"),
        BasisLabel::Triv => "Triv".into(),
    }
}

fn csv_only_for_tables() -> Error {
    Error::Domain("--format csv is only available for transition and bernstein".into())
}

fn rational_table(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| json::rationals(r)).collect())
}

pub fn run(object: &Object, oracle: &KlOracle, format: Format) -> Result<String> {
    let table_output = matches!(object, Object::Transition { .. } | Object::Bernstein { .. });
    if format == Format::Csv && !table_output {
        return Err(csv_only_for_tables());
    }
    let value = match object {
        Object::Kl { u, v } => {
            let mut out = poly_json(&oracle.kl_polynomial(u, v)?);
            out["u"] = json!(u.to_string());
            out["v"] = json!(v.to_string());
            out
        }
        Object::ParabolicKl { u, v, kind } => {
            let p = match kind {
                ParabolicKind::Q => parabolic_kl_q(u, v)?,
                ParabolicKind::Minus1 => parabolic_kl_minus(oracle, u, v)?,
            };
            let mut out = poly_json(&p);
            out["kind"] = json!(match kind {
                ParabolicKind::Q => "q",
                ParabolicKind::Minus1 => "-1",
            });
            out["u"] = json!(u.to_string());
            out["v"] = json!(v.to_string());
            out
        }
        Object::Rs { perm } => {
            let (p, q) = rs(perm);
            json!({"P": p.to_json(), "Q": q.to_json()})
        }
        Object::Transition { n, inverse } => {
            let (m, rows, cols): (IntMatrix, Vec<String>, Vec<String>) = if *inverse {
                (
                    transition_psibar_to_psi(*n)?,
                    basis_labels(*n).iter().map(basis_name).collect(),
                    psi_labels(*n).iter().map(psi_name).collect(),
                )
            } else {
                (
                    transition_psi_to_psibar(*n)?,
                    psi_labels(*n).iter().map(psi_name).collect(),
                    basis_labels(*n).iter().map(basis_name).collect(),
                )
            };
            if format == Format::Csv {
                return Ok(m.to_csv());
            }
            json!({
                "n": n,
                "rows": rows,
                "columns": cols,
                "matrix": m.to_json(),
                "determinant": json::int(&m.determinant()),
            })
        }
        Object::Bernstein { lambda } => {
            let lambda = WeightVector::parse(lambda)?;
            let n = lambda.degree();
            let mut cells = Vec::new();
            let mut csv = String::from("k,l,c\n");
            for k in 2..=n {
                for l in 2..=n {
                    let c = bernstein_c(&v_cycle(k, l, n)?, &lambda)?;
                    csv.push_str(&format!("{k},{l},{c}\n"));
                    cells.push(json!({"k": k, "l": l, "c": json::rational(&c)}));
                }
            }
            if format == Format::Csv {
                return Ok(csv);
            }
            let dims = (1..=n)
                .map(|i| (1..=n).map(|j| dim_f(i, j, &lambda)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            json!({"lambda": lambda.to_json(), "bernstein": cells, "dim_F": rational_table(&dims)})
        }
        Object::Classify { gamma } => gk_dim_class(gamma)?.to_json(gamma.degree()),
        Object::Singular { i, j, n } => {
            let (i0, j0) = singular_indices(*i, *j, *n)?;
            let (lambda, gamma) = singular_point(*i, *j, *n)?;
            let class = gk_dim_class(&gamma)?;
            let mut out = class.to_json(*n);
            out["lambda"] = lambda.to_json();
            out["gamma"] = gamma.to_json();
            out["i0"] = json!(i0);
            out["j0"] = json!(j0);
            out["dominant"] = json!(is_dominant(&lambda));
            out["regular"] = json!(is_regular(&lambda));
            out
        }
        Object::Composition { i, j, lambda } => {
            let lambda = WeightVector::parse(lambda)?;
            let series = composition_series(*i, *j, &lambda)?;
            let total: Rational =
                series.iter().filter_map(|c| c.bernstein_degree.clone()).fold(Rational::zero(), |a, b| a + b);
            json!({
                "lambda": lambda.to_json(),
                "i": i,
                "j": j,
                "constituents": series.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                "minimal_degree_total": json::rational(&total),
                "dim_F": json::rational(&dim_f(*i, *j, &lambda)?),
            })
        }
    };
    Ok(format!("{value}\n"))
}
