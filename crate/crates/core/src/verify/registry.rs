//! Catalog of runnable checks: identifiers, parameter schemas, and dispatch
//! from string-valued parameters. The command-line interface and the suite
//! runner both go through this table.

use std::collections::BTreeMap;

use crate::exactalg::{HMode, Side};
use crate::symgroup::StandardTableau;
use crate::verify::build::TurnbullKind;
use crate::verify::checks;
use crate::verify::report::{CheckReport, ResourceBounds};

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub about: &'static str,
    pub default: Option<&'static str>,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckDef {
    pub id: &'static str,
    pub about: &'static str,
    pub params: &'static [ParamSpec],
}

/// A parameter error: reported as a usage failure (CLI exit code 2), never
/// as a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

macro_rules! params {
    ($($name:literal : $about:literal $(= $default:literal)?),* $(,)?) => {
        &[$( ParamSpec {
            name: $name,
            about: $about,
            default: params!(@d $($default)?),
        } ),*]
    };
    (@d) => { None };
    (@d $default:literal) => { Some($default) };
}

pub fn catalog() -> &'static [CheckDef] {
    &[
        CheckDef {
            id: "classical-capelli",
            about: "classical Capelli identity in the Weyl algebra, normal-form and differential-action modes",
            params: params!("n": "matrix size (1..=3)"),
        },
        CheckDef {
            id: "capelli-general",
            about: "Capelli identity for immanants: four operator expressions pairwise equal",
            params: params!(
                "n": "rows of X",
                "m": "columns of X / rows of Y",
                "s": "columns of Y",
                "r": "tensor factors",
                "hmode": "symbolic | identity | scalar-h" = "symbolic",
            ),
        },
        CheckDef {
            id: "williamson",
            about: "Schur-matrix-function Capelli identity; block-matrix and operator-extracted readings",
            params: params!(
                "n": "rows of X",
                "m": "columns of X",
                "s": "columns of Y",
                "shape": "partition, e.g. [2,1]",
                "upper": "row multi-index I, e.g. [1,2]",
                "lower": "column multi-index K, e.g. [2,2]",
                "hmode": "symbolic | identity | scalar-h" = "symbolic",
            ),
        },
        CheckDef {
            id: "okounkov",
            about: "higher Capelli identity for a standard tableau pair",
            params: params!(
                "d": "matrix size (n = m = s = d)",
                "shape": "partition, e.g. [2,1]",
                "t": "standard tableau, e.g. [[1,2],[3]]",
                "tprime": "standard tableau of the same shape",
                "hmode": "symbolic | identity | scalar-h" = "symbolic",
                "psi-scale": "rescale Psi; the verdict must not change" = "1",
            ),
        },
        CheckDef {
            id: "turnbull-sym",
            about: "Turnbull identity for symmetric X: operator and determinant forms",
            params: params!(
                "n": "size of symmetric X",
                "m": "columns of Y",
                "r": "tensor factors (r <= n)",
                "hmode": "symbolic | identity | scalar-h" = "symbolic",
            ),
        },
        CheckDef {
            id: "turnbull-anti",
            about: "Turnbull identity for antisymmetric X: operator and permanent forms",
            params: params!(
                "n": "size of antisymmetric X",
                "m": "columns of Y",
                "r": "tensor factors",
                "hmode": "symbolic | identity | scalar-h" = "symbolic",
            ),
        },
        CheckDef {
            id: "huks-even",
            about: "Howe-Umeda-Kostant-Sahi determinant identity, even size",
            params: params!(
                "n": "even matrix size",
                "antisym": "which matrix is antisymmetric: X | Y" = "Y",
            ),
        },
        CheckDef {
            id: "huks-odd",
            about: "odd-size variant: both sides are the zero polynomial",
            params: params!(
                "n": "odd matrix size",
                "antisym": "which matrix is antisymmetric: X | Y" = "Y",
            ),
        },
        CheckDef {
            id: "pf-definitions",
            about: "Pfaffian definitions agree: 2-shuffle, full sum, first-row expansion",
            params: params!("n": "even size"),
        },
        CheckDef {
            id: "pf-laplace",
            about: "Laplace-type expansion of a bordered Pfaffian",
            params: params!("m": "first block size", "n": "second block size (m+n even)"),
        },
        CheckDef {
            id: "pf-corollary",
            about: "bordered Pfaffian with vanishing corner: three regimes",
            params: params!("m": "first block size", "n": "second block size (m+n even)"),
        },
        CheckDef {
            id: "pf-congruence",
            about: "Pf(U^t X U) = det(U) Pf(X) for rational U",
            params: params!("n": "even size"),
        },
        CheckDef {
            id: "pf-permutation",
            about: "Pf(X[sigma(i),sigma(j)]) = sgn(sigma) Pf(X) over all sigma",
            params: params!("n": "even size"),
        },
        CheckDef {
            id: "pf-alternating",
            about: "rearrangement identity on matrices with vanishing I-block",
            params: params!("n": "even size", "set": "index set I, e.g. [2,4]"),
        },
        CheckDef {
            id: "pf-minor-sum3",
            about: "Pfaffian minor-sum exchange identity",
            params: params!("n": "even size", "p": "half-size parameter"),
        },
        CheckDef {
            id: "pf-minor-sum6",
            about: "vanishing Pfaffian minor sum",
            params: params!("n": "even size", "p": "half-size parameter"),
        },
        CheckDef {
            id: "pf-fg-action",
            about: "pairing-operator action produces the Pfaffian coefficient",
            params: params!("m": "number of pairs", "n": "factor dimension"),
        },
        CheckDef {
            id: "lemma-axq-sxq",
            about: "A_r X_1 Q^(1,i) = 0 (symmetric X) and S_r X_1 Q^(1,i) = 0 (antisymmetric X)",
            params: params!(
                "n": "matrix size",
                "r": "tensor factors",
                "i": "paired position (2..=r)",
                "x": "sym | anti" = "sym",
            ),
        },
        CheckDef {
            id: "lemma-claim",
            about: "A_3 (X_i Q Q - X_j Q) = 0 and its variant",
            params: params!(
                "n": "matrix size",
                "r": "tensor factors",
                "i": "first position",
                "j": "second position",
                "k": "third position",
            ),
        },
        CheckDef {
            id: "lemma-huks-expansion",
            about: "expansion of the shifted product into s_p and w_p corrections",
            params: params!("n": "even matrix size", "m": "number of factors (m <= n)"),
        },
        CheckDef {
            id: "lemma-huks-phi-psi",
            about: "paired correction terms annihilate the ordered basis vector",
            params: params!("n": "even matrix size", "p": "0 <= p < n/2"),
        },
        CheckDef {
            id: "lemma-odd-expansion",
            about: "odd-case expansion into s corrections",
            params: params!(
                "n": "odd matrix size",
                "m": "number of factors (m <= n)",
                "antisym": "X | Y" = "Y",
            ),
        },
        CheckDef {
            id: "lemma-odd-anti",
            about: "odd-case vanishing lemmas (part 1: antisymmetric X; part 2: antisymmetric Y)",
            params: params!("n": "odd matrix size", "k": "number of pairs", "part": "1 | 2"),
        },
        CheckDef {
            id: "engine-assoc",
            about: "seeded associativity fuzz of the rewriting engine",
            params: params!(
                "family": "capelli | capelli-rect | turnbull-sym | turnbull-anti | huks-x | huks-y | weyl",
                "seed": "random seed" = "1729",
                "count": "number of triples" = "1000",
            ),
        },
        CheckDef {
            id: "engine-idempotence",
            about: "canonical forms are fixed points of normalization",
            params: params!("seed": "random seed" = "1729"),
        },
        CheckDef {
            id: "engine-symmetry",
            about: "antisymmetric diagonals vanish; transposed representatives carry signs",
            params: params!(),
        },
        CheckDef {
            id: "engine-xh-commute",
            about: "[X, H] = 0 reproduced through multiplication",
            params: params!(),
        },
        CheckDef {
            id: "engine-action-oracle",
            about: "normalized words act like raw words on polynomials (Weyl algebra)",
            params: params!(
                "n": "Weyl rank (1..=2)",
                "seed": "random seed" = "1729",
                "count": "number of samples" = "200",
            ),
        },
        CheckDef {
            id: "engine-cross-oracle",
            about: "functional vs projector coefficients; character vs trace; scalar vs operator coupling",
            params: params!(),
        },
        CheckDef {
            id: "mutation-capelli-zshift",
            about: "control: offset Jucys-Murphy elements must break the Capelli identity",
            params: params!(),
        },
        CheckDef {
            id: "mutation-huks-shift",
            about: "control: wrong diagonal shifts must break the even identity",
            params: params!(),
        },
        CheckDef {
            id: "mutation-classical-shift",
            about: "control: dropping the classical diagonal must fail",
            params: params!(),
        },
        CheckDef {
            id: "mutation-turnbull-shift",
            about: "control: flipped H shifts must break the Turnbull identity",
            params: params!(),
        },
        CheckDef {
            id: "mutation-okounkov-content",
            about: "control: offset tableau contents must break the higher Capelli identity",
            params: params!(),
        },
        CheckDef {
            id: "mutation-claim-dropq",
            about: "control: dropping a Q factor must break the exchange lemma",
            params: params!(),
        },
        CheckDef {
            id: "mutation-pfaffian-sign",
            about: "control: unsigned matching sum differs from the Pfaffian",
            params: params!(),
        },
        CheckDef {
            id: "mutation-williamson-vdrop",
            about: "control: dropping multiplicity factors must break the scalar identity",
            params: params!(),
        },
    ]
}

pub fn find(id: &str) -> Option<&'static CheckDef> {
    catalog().iter().find(|c| c.id == id)
}

struct Args<'a> {
    def: &'static CheckDef,
    given: &'a BTreeMap<String, String>,
}

impl<'a> Args<'a> {
    fn new(def: &'static CheckDef, given: &'a BTreeMap<String, String>) -> Result<Self, UsageError> {
        for key in given.keys() {
            if !def.params.iter().any(|p| p.name == key) {
                return Err(UsageError(format!(
                    "unknown parameter --{key} for check {}; known: {}",
                    def.id,
                    def.params.iter().map(|p| p.name).collect::<Vec<_>>().join(", ")
                )));
            }
        }
        Ok(Args { def, given })
    }

    fn raw(&self, name: &str) -> Result<String, UsageError> {
        if let Some(v) = self.given.get(name) {
            return Ok(v.clone());
        }
        let spec = self.def.params.iter().find(|p| p.name == name).expect("declared");
        spec.default.map(|d| d.to_string()).ok_or_else(|| {
            UsageError(format!("missing required parameter --{name} for check {}", self.def.id))
        })
    }

    fn u8(&self, name: &str) -> Result<u8, UsageError> {
        self.raw(name)?
            .parse()
            .map_err(|_| UsageError(format!("parameter --{name} must be a small integer")))
    }

    fn usize(&self, name: &str) -> Result<usize, UsageError> {
        self.raw(name)?
            .parse()
            .map_err(|_| UsageError(format!("parameter --{name} must be an integer")))
    }

    fn u64(&self, name: &str) -> Result<u64, UsageError> {
        self.raw(name)?
            .parse()
            .map_err(|_| UsageError(format!("parameter --{name} must be an integer")))
    }

    fn i64(&self, name: &str) -> Result<i64, UsageError> {
        self.raw(name)?
            .parse()
            .map_err(|_| UsageError(format!("parameter --{name} must be an integer")))
    }

    fn hmode(&self) -> Result<HMode, UsageError> {
        match self.raw("hmode")?.as_str() {
            "symbolic" => Ok(HMode::Symbolic),
            "identity" => Ok(HMode::Identity),
            "scalar-h" => Ok(HMode::ScalarH),
            other => Err(UsageError(format!(
                "unknown hmode {other:?}; expected symbolic, identity or scalar-h"
            ))),
        }
    }

    fn side(&self, name: &str) -> Result<Side, UsageError> {
        match self.raw(name)?.as_str() {
            "X" | "x" => Ok(Side::X),
            "Y" | "y" => Ok(Side::Y),
            other => Err(UsageError(format!("parameter --{name} must be X or Y, got {other:?}"))),
        }
    }

    fn index_list(&self, name: &str) -> Result<Vec<u8>, UsageError> {
        parse_index_list(&self.raw(name)?)
            .ok_or_else(|| UsageError(format!("parameter --{name} must look like [1,2,3]")))
    }

    fn tableau(&self, name: &str) -> Result<StandardTableau, UsageError> {
        let raw = self.raw(name)?;
        parse_tableau(&raw)
            .ok_or_else(|| UsageError(format!("parameter --{name} must look like [[1,2],[3]]")))
    }
}

pub fn parse_index_list(s: &str) -> Option<Vec<u8>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner
        .split(',')
        .map(|part| part.trim().parse::<u8>().ok())
        .collect()
}

pub fn parse_tableau(s: &str) -> Option<StandardTableau> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.clear();
            }
            ']' => {
                if depth == 0 {
                    return None;
                }
                depth -= 1;
                let row: Option<Vec<u8>> =
                    current.split(',').map(|p| p.trim().parse::<u8>().ok()).collect();
                rows.push(row?);
            }
            ',' if depth == 0 => {}
            other => current.push(other),
        }
    }
    StandardTableau::new(rows).ok()
}

/// Run a check by identifier with string parameters. Unknown identifiers,
/// unknown or malformed parameters, and violated CLI-level preconditions
/// are usage errors.
pub fn run_check(
    id: &str,
    given: &BTreeMap<String, String>,
    bounds: &ResourceBounds,
) -> Result<CheckReport, UsageError> {
    let def = find(id).ok_or_else(|| {
        UsageError(format!(
            "unknown check {id:?}; run `list` for the catalog of check identifiers"
        ))
    })?;
    let a = Args::new(def, given)?;
    let report = match id {
        "classical-capelli" => {
            let n = a.u8("n")?;
            if n == 0 || n > 3 {
                return Err(UsageError("classical check supports n in 1..=3".into()));
            }
            checks::check_classical_capelli(n, false, bounds)
        }
        "capelli-general" => checks::check_capelli_general(
            a.u8("n")?,
            a.u8("m")?,
            a.u8("s")?,
            a.usize("r")?,
            a.hmode()?,
            0,
            bounds,
        ),
        "williamson" => {
            let shape = a.index_list("shape")?;
            checks::check_williamson(
                a.u8("n")?,
                a.u8("m")?,
                a.u8("s")?,
                &shape,
                &a.index_list("upper")?,
                &a.index_list("lower")?,
                a.hmode()?,
                false,
                bounds,
            )
        }
        "okounkov" => {
            let shape = a.index_list("shape")?;
            checks::check_okounkov(
                a.u8("d")?,
                &shape,
                &a.tableau("t")?,
                &a.tableau("tprime")?,
                a.hmode()?,
                0,
                a.i64("psi-scale")?,
                bounds,
            )
        }
        "turnbull-sym" => checks::check_turnbull(
            TurnbullKind::SymDet,
            a.u8("n")?,
            a.u8("m")?,
            a.usize("r")?,
            a.hmode()?,
            1,
            bounds,
        ),
        "turnbull-anti" => checks::check_turnbull(
            TurnbullKind::AntiPer,
            a.u8("n")?,
            a.u8("m")?,
            a.usize("r")?,
            a.hmode()?,
            1,
            bounds,
        ),
        "huks-even" => {
            let n = a.u8("n")?;
            if n % 2 != 0 || n == 0 {
                return Err(UsageError(format!("huks-even requires even n, got {n}")));
            }
            checks::check_huks(true, n, a.side("antisym")?, None, bounds)
        }
        "huks-odd" => {
            let n = a.u8("n")?;
            if n % 2 == 0 {
                return Err(UsageError(format!("huks-odd requires odd n, got {n}")));
            }
            checks::check_huks(false, n, a.side("antisym")?, None, bounds)
        }
        "pf-definitions" => checks::check_pf_definitions(a.u8("n")?, false, bounds),
        "pf-laplace" => checks::check_pf_laplace(a.u8("m")?, a.u8("n")?, bounds),
        "pf-corollary" => checks::check_pf_corollary(a.u8("m")?, a.u8("n")?, bounds),
        "pf-congruence" => checks::check_pf_congruence(a.u8("n")?, bounds),
        "pf-permutation" => checks::check_pf_permutation(a.u8("n")?, bounds),
        "pf-alternating" => {
            checks::check_pf_alternating(a.u8("n")?, &a.index_list("set")?, bounds)
        }
        "pf-minor-sum3" => checks::check_pf_minor_sum3(a.u8("n")?, a.usize("p")?, bounds),
        "pf-minor-sum6" => checks::check_pf_minor_sum6(a.u8("n")?, a.usize("p")?, bounds),
        "pf-fg-action" => checks::check_pf_fg_action(a.usize("m")?, a.u8("n")?, bounds),
        "lemma-axq-sxq" => {
            let anti = match a.raw("x")?.as_str() {
                "sym" => false,
                "anti" => true,
                other => {
                    return Err(UsageError(format!("--x must be sym or anti, got {other:?}")))
                }
            };
            checks::check_axq_sxq(a.u8("n")?, a.usize("r")?, a.usize("i")?, anti, bounds)
        }
        "lemma-claim" => checks::check_claim_lemma(
            a.u8("n")?,
            a.usize("r")?,
            a.usize("i")?,
            a.usize("j")?,
            a.usize("k")?,
            false,
            bounds,
        ),
        "lemma-huks-expansion" => checks::check_huks_expansion(a.u8("n")?, a.usize("m")?, bounds),
        "lemma-huks-phi-psi" => checks::check_huks_phi_psi(a.u8("n")?, a.usize("p")?, bounds),
        "lemma-odd-expansion" => {
            checks::check_odd_expansion(a.u8("n")?, a.usize("m")?, a.side("antisym")?, bounds)
        }
        "lemma-odd-anti" => {
            checks::check_odd_anti(a.u8("n")?, a.usize("k")?, a.usize("part")?, bounds)
        }
        "engine-assoc" => {
            checks::check_assoc_fuzz(&a.raw("family")?, a.u64("seed")?, a.usize("count")?)
        }
        "engine-idempotence" => checks::check_idempotence(a.u64("seed")?),
        "engine-symmetry" => checks::check_symmetry_compat(),
        "engine-xh-commute" => checks::check_xh_commute(),
        "engine-action-oracle" => {
            checks::check_action_oracle(a.u8("n")?, a.u64("seed")?, a.usize("count")?)
        }
        "engine-cross-oracle" => checks::check_cross_oracles(bounds),
        "mutation-capelli-zshift" => {
            checks::check_capelli_general(2, 2, 2, 2, HMode::Symbolic, 1, bounds)
        }
        "mutation-huks-shift" => checks::check_huks(true, 2, Side::Y, Some(vec![1, 0]), bounds),
        "mutation-classical-shift" => checks::check_classical_capelli(2, true, bounds),
        "mutation-turnbull-shift" => checks::check_turnbull(
            TurnbullKind::SymDet,
            2,
            2,
            2,
            HMode::Symbolic,
            -1,
            bounds,
        ),
        "mutation-okounkov-content" => {
            let ts = crate::symgroup::standard_tableaux(&[1, 1]).expect("valid shape");
            checks::check_okounkov(2, &[1, 1], &ts[0], &ts[0], HMode::Symbolic, 1, 1, bounds)
        }
        "mutation-claim-dropq" => checks::check_claim_lemma(3, 3, 1, 2, 3, true, bounds),
        "mutation-pfaffian-sign" => checks::check_pf_definitions(4, true, bounds),
        "mutation-williamson-vdrop" => checks::check_williamson(
            1,
            1,
            1,
            &[2],
            &[1, 1],
            &[1, 1],
            HMode::Symbolic,
            true,
            bounds,
        ),
        _ => unreachable!("catalog covers all identifiers"),
    };
    Ok(report)
}
