//! Numeric constants attached to a surface of genus `g` with `p` punctures.
//!
//! Everything is exact integer or rational arithmetic.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceParams {
    pub genus: u32,
    pub punctures: u32,
    /// `ξ = 3g - 3 + p`, the size of a maximal multicurve and the clique
    /// number of the curve graph.
    pub xi: u64,
    /// `6g - 6 + 2p`, the NCL of the curve graph.
    pub ncl_bound: u64,
    /// `ℓ = g + ⌊(g + p)/2⌋ - 1`: the largest `r` with `K_r(t)` (`t >= 2`)
    /// induced in the curve graph.
    pub multipartite_bound: u64,
    /// `6g - 5 + 2p`: the curve graph is `k`-edge stable for this `k`.
    pub stability_k: u64,
    /// `2g + p`: induced `H_n` with `n` at least this is excluded.
    pub bipartite_half_graph_bound: u64,
    /// `1 - 1/ℓ`.
    #[serde(with = "ratio_string")]
    pub upper_density: Ratio<u64>,
    /// `(0, 5)` and `(1, 2)`, where `ℓ = 1` and the upper density vanishes.
    pub exceptional: bool,
}

impl SurfaceParams {
    pub fn new(genus: u32, punctures: u32) -> Result<SurfaceParams> {
        let (g, p) = (u64::from(genus), u64::from(punctures));
        let reject = |reason: &str| Error::Surface {
            genus,
            punctures,
            reason: reason.to_string(),
        };
        if 2 * g + p <= 2 {
            return Err(reject("not hyperbolic (needs 2g + p > 2)"));
        }
        if 3 * g + p < 5 {
            return Err(reject(
                "low-complexity surface (needs 3g + p >= 5); its curve graph has no edges",
            ));
        }
        let xi = 3 * g + p - 3;
        let multipartite_bound = g + (g + p) / 2 - 1;
        Ok(SurfaceParams {
            genus,
            punctures,
            xi,
            ncl_bound: 2 * xi,
            multipartite_bound,
            stability_k: 6 * g + 2 * p - 5,
            bipartite_half_graph_bound: 2 * g + p,
            upper_density: Ratio::from_integer(1) - Ratio::new(1, multipartite_bound),
            exceptional: (genus, punctures) == (0, 5) || (genus, punctures) == (1, 2),
        })
    }
}

pub fn surface_params(genus: u32, punctures: u32) -> Result<SurfaceParams> {
    SurfaceParams::new(genus, punctures)
}

/// `2 / (1 - δ)`: the NCL lower bound forced by upper density `δ < 1`.
pub fn density_ncl_lower_bound(delta: Ratio<u64>) -> Result<Ratio<u64>> {
    if delta >= Ratio::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "density {delta} must be below 1 (complete graphs have NCL 1)"
        )));
    }
    Ok(Ratio::from_integer(2) / (Ratio::from_integer(1) - delta))
}

/// Serializes a ratio as `"num/den"` (or `"num"` when the denominator is 1).
pub mod ratio_string {
    use num_rational::Ratio;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(de::Error::custom)
    }

    pub fn parse(text: &str) -> Result<Ratio<u64>, String> {
        let text = text.trim();
        let parse_int = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        match text.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d == 0 {
                    return Err("zero denominator".into());
                }
                Ok(Ratio::new(parse_int(n)?, d))
            }
            None => match text.split_once('.') {
                Some((whole, frac)) if !frac.is_empty() && frac.len() <= 18 => {
                    let den = 10u64.pow(frac.len() as u32);
                    let whole = if whole.is_empty() { 0 } else { parse_int(whole)? };
                    Ok(Ratio::new(whole * den + parse_int(frac)?, den))
                }
                Some(_) => Err(format!("cannot parse {text:?} as a fraction")),
                None => Ok(Ratio::from_integer(parse_int(text)?)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_punctured_sphere() {
        let s = surface_params(0, 5).unwrap();
        assert_eq!((s.xi, s.ncl_bound, s.multipartite_bound, s.stability_k), (2, 4, 1, 5));
        assert_eq!(s.upper_density, Ratio::from_integer(0));
        assert_eq!(s.bipartite_half_graph_bound, 5);
        assert!(s.exceptional);
    }

    #[test]
    fn genus_two_closed() {
        let s = surface_params(2, 0).unwrap();
        assert_eq!((s.xi, s.ncl_bound, s.multipartite_bound, s.stability_k), (3, 6, 2, 7));
        assert_eq!(s.upper_density, Ratio::new(1, 2));
        assert!(!s.exceptional);
    }

    #[test]
    fn twice_punctured_torus() {
        let s = surface_params(1, 2).unwrap();
        assert_eq!((s.xi, s.ncl_bound, s.multipartite_bound), (2, 4, 1));
        assert_eq!(s.upper_density, Ratio::from_integer(0));
        assert!(s.exceptional);
    }

    #[test]
    fn rejections() {
        for (g, p) in [(0, 3), (0, 4), (1, 1)] {
            let err = surface_params(g, p).unwrap_err().to_string();
            assert!(err.contains("no edges"), "{err}");
        }
        for (g, p) in [(0, 0), (0, 1), (0, 2), (1, 0)] {
            let err = surface_params(g, p).unwrap_err().to_string();
            assert!(err.contains("not hyperbolic"), "{err}");
        }
    }

    #[test]
    fn grid_invariants() {
        for g in 0..6 {
            for p in 0..10 {
                let Ok(s) = surface_params(g, p) else { continue };
                assert_eq!(s.ncl_bound, 2 * s.xi);
                assert!(s.multipartite_bound >= 1);
                if 3 * g + p >= 6 {
                    assert!(s.multipartite_bound < s.xi, "g={g} p={p}");
                }
            }
        }
        let densities: Vec<_> = (0..6)
            .map(|k| surface_params(0, 5 + 2 * k).unwrap().upper_density)
            .collect();
        assert!(densities.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn density_lower_bound() {
        assert_eq!(
            density_ncl_lower_bound(Ratio::from_integer(0)).unwrap(),
            Ratio::from_integer(2)
        );
        assert_eq!(
            density_ncl_lower_bound(Ratio::new(1, 2)).unwrap(),
            Ratio::from_integer(4)
        );
        for r in 1..=6u64 {
            let delta = Ratio::from_integer(1) - Ratio::new(1, r);
            assert_eq!(density_ncl_lower_bound(delta).unwrap(), Ratio::from_integer(2 * r));
        }
        assert!(density_ncl_lower_bound(Ratio::from_integer(1)).is_err());
    }

    #[test]
    fn ratio_strings() {
        assert_eq!(ratio_string::parse("1/2").unwrap(), Ratio::new(1, 2));
        assert_eq!(ratio_string::parse("0.25").unwrap(), Ratio::new(1, 4));
        assert_eq!(ratio_string::parse("1").unwrap(), Ratio::from_integer(1));
        assert_eq!(ratio_string::parse(".5").unwrap(), Ratio::new(1, 2));
        assert!(ratio_string::parse("1/0").is_err());
        assert!(ratio_string::parse("x").is_err());
        let json = serde_json::to_string(&surface_params(2, 0).unwrap()).unwrap();
        assert!(json.contains(r#""upper_density":"1/2""#));
        let back: SurfaceParams = serde_json::from_str(&json).unwrap();
        assert_eq!(back, surface_params(2, 0).unwrap());
    }
}
