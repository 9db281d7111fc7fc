use super::{classical_ids, q_ids, Mode, ParamValue, Params, Sides, Suite, SuiteConfig};
use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Grid limits handed to an identity's parameter generator. `alphas` holds
/// the distinct positive `α` values requested.
pub(crate) struct Grid {
    pub alphas: Vec<i64>,
    pub n_max: usize,
}

impl Grid {
    /// `min(cap, n_max)`
    pub fn cap(&self, cap: usize) -> usize {
        cap.min(self.n_max)
    }
}

/// One registered identity.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// Name of the result this identity comes from.
    pub anchor: &'static str,
    pub suite: Suite,
    /// Whether a misprinted variant can be selected with `mode=as_printed`.
    pub has_as_printed: bool,
    pub(crate) grid_fn: fn(&Grid) -> Vec<Params>,
    pub(crate) eval: fn(&Params) -> Result<Sides>,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .finish()
    }
}

/// Largest `n_max` that changes any identity's grid.
const GRID_CAP: usize = 12;

fn positive_alphas(list: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = list.iter().map(|a| a.abs()).filter(|&a| a > 0).collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl IdentitySpec {
    fn grid_with(&self, grid: &Grid, mode: Mode) -> Vec<Params> {
        let mut out = (self.grid_fn)(grid);
        if self.has_as_printed {
            for p in &mut out {
                p.insert("mode".into(), ParamValue::Str(mode.as_str().into()));
            }
        }
        out
    }

    /// Parameter points of this identity within `config`.
    pub fn grid(&self, config: &SuiteConfig) -> Vec<Params> {
        let grid = Grid {
            alphas: positive_alphas(&config.alpha_list),
            n_max: config.n_max,
        };
        self.grid_with(&grid, config.mode)
    }

    /// Accepts `p` only if it is a point of this identity's full grid.
    pub fn validate(&self, p: &Params) -> Result<()> {
        let out_of_domain = |reason: String| Error::ParamsOutOfDomain {
            id: self.id.to_string(),
            reason,
        };
        let alphas = match p.get("alpha") {
            Some(ParamValue::Int(0)) => return Err(out_of_domain("alpha must be nonzero".into())),
            Some(ParamValue::Int(a)) => vec![a.abs()],
            Some(_) => return Err(out_of_domain("alpha must be an integer".into())),
            None => vec![1],
        };
        let mode = match p.get("mode") {
            Some(ParamValue::Str(m)) => m.parse::<Mode>().map_err(out_of_domain)?,
            _ => Mode::Corrected,
        };
        // every grid caps its sizes at 12 or below, but some points (series
        // orders) depend on n_max itself, so each n_max up to the cap is tried
        let found = (1..=GRID_CAP).any(|n_max| {
            let grid = Grid {
                alphas: alphas.clone(),
                n_max,
            };
            self.grid_with(&grid, mode).contains(p)
        });
        if found {
            Ok(())
        } else {
            Err(out_of_domain(format!(
                "({}) is not in the parameter domain",
                super::format_params(p)
            )))
        }
    }
}

/// All registered identities, classical group first.
pub fn registry() -> &'static [IdentitySpec] {
    static REGISTRY: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = classical_ids::specs();
        v.extend(q_ids::specs());
        v
    })
}

pub fn identity(id: &str) -> Option<&'static IdentitySpec> {
    registry().iter().find(|s| s.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const EXPECTED: &[&str] = &[
        "lah_rec",
        "lah_egf",
        "lah_hgf",
        "stirling_hgf",
        "lah_conv",
        "qi_bell",
        "w_hgf",
        "wl_rec",
        "wl_hgf",
        "wl_conv",
        "mansour",
        "r1",
        "r2",
        "r2.1",
        "r3",
        "graham",
        "r4",
        "gouqi",
        "ortho",
        "gqif1",
        "dobinski",
        "q_defs",
        "qw1w2",
        "qr1",
        "qr1_1",
        "qr2",
        "qr2_1",
        "inv_qtw",
        "qbinom_inv",
        "pe1",
        "pe2",
        "qgqif1",
        "q_limits",
    ];

    #[test]
    fn registry_covers_every_identity() {
        for id in EXPECTED {
            let spec = identity(id).unwrap_or_else(|| panic!("{id} not registered"));
            let cfg = SuiteConfig::new(Suite::All, vec![1, 2], 8, Mode::Corrected);
            assert!(!spec.grid(&cfg).is_empty(), "{id} has an empty grid");
            assert!(!spec.anchor.is_empty() && !spec.description.is_empty());
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut seen = HashSet::new();
        for s in registry() {
            assert!(seen.insert(s.id), "duplicate id {}", s.id);
        }
    }

    #[test]
    fn only_known_misprints_have_as_printed_variants() {
        let with: Vec<&str> = registry()
            .iter()
            .filter(|s| s.has_as_printed)
            .map(|s| s.id)
            .collect();
        assert_eq!(with, vec!["mansour", "qr2", "qr2_1"]);
    }

    #[test]
    fn every_grid_point_validates() {
        let cfg = SuiteConfig::new(Suite::All, vec![2], 5, Mode::AsPrinted);
        for s in registry() {
            for p in s.grid(&cfg) {
                s.validate(&p).unwrap();
            }
        }
    }
}
