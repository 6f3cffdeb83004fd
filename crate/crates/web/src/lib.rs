//! Browser bindings. Every export returns a JSON string: the result on success,
//! `{"error": "..."}` otherwise.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use cmfixed::arith::Rational;
use cmfixed::fixed_points::{component_catalog, delta_map, Convention};
use cmfixed::parameters::{transport, transport_via_theta, ParamSet};
use cmfixed::partitions::{self, parse_partition, Multipartition, Partition, ResidueVector};
use cmfixed::Result;

fn respond<T: Serialize>(r: Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("outputs serialize"),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn params(a: &str, kparams: &str) -> Result<ParamSet> {
    let k = kparams.split(',').map(|t| t.trim().parse::<Rational>()).collect::<Result<Vec<_>>>()?;
    ParamSet::new(a.parse()?, k)
}

fn nonzero(v: usize) -> Result<usize> {
    if v == 0 {
        return Err(cmfixed::Error::Invalid("l and k must be at least 1".into()));
    }
    Ok(v)
}

#[derive(Serialize)]
struct Decomposition {
    core: Partition,
    removals: usize,
    quotient: Multipartition,
    residues: ResidueVector,
}

/// l-core, l-quotient and residue counts of a partition such as "4,2,1".
#[wasm_bindgen]
pub fn decompose(partition: &str, l: usize) -> String {
    respond((|| {
        let lam = parse_partition(partition)?;
        let (core, removals) = partitions::core(&lam, nonzero(l)?);
        Ok(Decomposition { core, removals, quotient: partitions::quotient(&lam, l), residues: partitions::residues(&lam, l) })
    })())
}

#[derive(Serialize)]
struct Transported {
    gamma: Multipartition,
    r: usize,
    a: Rational,
    k: Vec<Rational>,
    routes_agree: bool,
}

/// Parameters (a', k') carried by the component with dimension vector d.
#[wasm_bindgen]
pub fn transport_params(a: &str, kparams: &str, k: usize, d: &str) -> String {
    respond((|| {
        let p = params(a, kparams)?;
        let d = ResidueVector::parse(d)?;
        let gamma = delta_map(&d, p.l)?;
        let c = transport(&p, nonzero(k)?, &d)?;
        let routes_agree = transport_via_theta(&p, k, &d)? == c;
        let n = d.class_sums(p.l).entries[0] as usize;
        let r = (n - gamma.size()) / k;
        Ok(Transported { gamma, r, a: c.a, k: c.k, routes_agree })
    })())
}

/// The component catalog for (l, n, k) at the given parameters.
#[wasm_bindgen]
pub fn components(a: &str, kparams: &str, n: usize, k: usize, convention: &str) -> String {
    respond((|| {
        let p = params(a, kparams)?;
        let conv: Convention = convention.parse()?;
        component_catalog(&p, n, nonzero(k)?, conv)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> serde_json::Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn decompose_example() {
        let v = parse(decompose("4,2,1", 3));
        assert_eq!(v["core"], json!([1]));
        assert_eq!(v["removals"], 2);
        assert!(parse(decompose("1,2", 3))["error"].is_string());
        assert!(parse(decompose("1", 0))["error"].is_string());
    }

    #[test]
    fn transport_example() {
        let v = parse(transport_params("1", "-2,2", 2, "0,0,0,0"));
        assert_eq!(v["a"], "2");
        assert_eq!(v["k"], json!(["-3/2", "3/2", "-5/2", "5/2"]));
        assert_eq!(v["routes_agree"], true);
        assert!(parse(transport_params("1", "-2,2", 2, "1,0,0,0"))["error"].is_string());
    }

    #[test]
    fn components_example() {
        let v = parse(components("1", "-1/3,1/3", 3, 2, "gordon"));
        let labels: usize = v.as_array().unwrap().iter().map(|c| c["labels"].as_array().unwrap().len()).sum();
        assert_eq!(labels, 10);
        assert!(parse(components("0", "-1,1", 1, 2, "gordon"))["error"].is_string());
        assert!(parse(components("1", "0,0", 1, 2, "other"))["error"].is_string());
    }
}
