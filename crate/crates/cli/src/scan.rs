//! Family scan: decide every pair of family members and group them into
//! equivalence classes.

use rayon::prelude::*;
use serde::Serialize;

use qhlip_core::parse::{self, Bindings};
use qhlip_core::poly::Rat;
use qhlip_core::qh::{decide, validate_qh, QHPoly, Verdict2D, VerdictKind};

use crate::{parse_bi, render, resolve_pair, BetaArg, CliError, Outcome};

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub verdict: String,
    pub theorem: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub family: String,
    pub param: String,
    pub beta: String,
    pub values: Vec<String>,
    /// Index sets, each sorted, ordered by smallest member.
    pub partition: Vec<Vec<usize>>,
    pub unknown_pairs: Vec<[usize; 2]>,
    pub pairs: Vec<PairVerdict>,
}

impl ScanResult {
    /// Classes as sets of parameter values, for order-independent comparison.
    pub fn value_classes(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .partition
            .iter()
            .map(|c| {
                let mut v: Vec<String> = c.iter().map(|&i| self.values[i].clone()).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = i;
        while self.0[c] != r {
            let n = self.0[c];
            self.0[c] = r;
            c = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn parse_values(text: &str) -> Result<Vec<Rat>, CliError> {
    text.split(',')
        .map(|v| {
            parse::parse_rational(v).map_err(|err| CliError::Parse {
                input: v.trim().to_string(),
                err,
            })
        })
        .collect()
}

pub fn scan(
    family: &str,
    param: &str,
    values: &[Rat],
    beta: BetaArg,
    bindings: &Bindings,
) -> Result<ScanResult, CliError> {
    if values.is_empty() {
        return Err(CliError::Scan("no parameter values given".into()));
    }
    let mut raw = Vec::with_capacity(values.len());
    for v in values {
        let mut b = bindings.clone();
        b.insert(param.to_string(), v.clone());
        raw.push(parse_bi(family, &b)?);
    }
    // β comes from the first member that determines it.
    let (r, s) = match beta {
        BetaArg::Given(r, s) => (r, s),
        BetaArg::Infer => {
            let (q, _) = resolve_pair(&raw[0], raw.last().expect("nonempty"), BetaArg::Infer)?;
            (q.r(), q.s())
        }
    };
    let members: Vec<QHPoly> = raw
        .iter()
        .map(|p| validate_qh(p, r, s))
        .collect::<Result<_, _>>()?;
    let n = members.len();
    let idx: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let verdicts: Vec<Result<Verdict2D, CliError>> = idx
        .par_iter()
        .map(|&(i, j)| decide(&members[i], &members[j]).map_err(CliError::from))
        .collect();
    let mut uf = UnionFind((0..n).collect());
    let mut pairs = Vec::with_capacity(idx.len());
    let mut kinds = vec![vec![VerdictKind::Equivalent; n]; n];
    let mut unknown_pairs = Vec::new();
    for (&(i, j), v) in idx.iter().zip(verdicts) {
        let v = v?;
        let kind = v.kind();
        kinds[i][j] = kind;
        kinds[j][i] = kind;
        match kind {
            VerdictKind::Equivalent => uf.union(i, j),
            VerdictKind::Unknown => unknown_pairs.push([i, j]),
            VerdictKind::NotEquivalent => {}
        }
        pairs.push(PairVerdict {
            i,
            j,
            verdict: kind.to_string(),
            theorem: v.certificate().map(|c| c.theorem.as_str().to_string()),
        });
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; n];
    for i in 0..n {
        let r = uf.find(i);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[root_class[r]].push(i);
    }
    // Equivalence is transitive, so no class may contain a NotEquivalent pair.
    for c in &classes {
        for (a, &i) in c.iter().enumerate() {
            for &j in &c[a + 1..] {
                if kinds[i][j] == VerdictKind::NotEquivalent {
                    return Err(CliError::Scan(format!(
                        "transitivity violated: members {i} and {j} are linked by Equivalent verdicts but decided NotEquivalent"
                    )));
                }
            }
        }
    }
    Ok(ScanResult {
        family: family.to_string(),
        param: param.to_string(),
        beta: format!("{r}/{s}"),
        values: values.iter().map(|v| v.to_string()).collect(),
        partition: classes,
        unknown_pairs,
        pairs,
    })
}

pub fn cmd_scan(
    family: &str,
    param: &str,
    values: &str,
    beta: BetaArg,
    lets: &[String],
) -> Result<Outcome, CliError> {
    let b = crate::bindings_from(lets)?;
    let vals = parse_values(values)?;
    let res = scan(family, param, &vals, beta, &b)?;
    Ok(Outcome {
        json: render(&res),
        code: 0,
    })
}
