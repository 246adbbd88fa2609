use std::collections::HashMap;
use std::sync::Mutex;

use crate::constants;
use crate::error::Result;
use crate::search::{Estimate, Strategy};
use crate::spaces::NormedSpace;

/// Estimates shared between the checks of one suite run. Every estimate is a
/// deterministic function of its key, so reuse never changes a result.
pub(crate) struct Memo {
    strategy: Strategy,
    map: Mutex<HashMap<String, Estimate>>,
}

impl Memo {
    pub fn new(strategy: Strategy) -> Self {
        Self {
            strategy,
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn strategy(&self) -> &Strategy {
        &self.strategy
    }

    fn get(&self, key: String, compute: impl FnOnce(&Strategy) -> Result<Estimate>) -> Result<Estimate> {
        if let Some(e) = self.map.lock().expect("not poisoned").get(&key) {
            return Ok(e.clone());
        }
        let e = compute(&self.strategy)?;
        self.map.lock().expect("not poisoned").insert(key, e.clone());
        Ok(e)
    }

    pub fn cinj_iso(&self, space: &NormedSpace, alpha: f64, p: f64) -> Result<Estimate> {
        self.get(format!("cinj_iso|{space}|{alpha}|{p}"), |s| constants::cinj_iso(space, alpha, p, s))
    }

    pub fn cinj_via_gamma(&self, space: &NormedSpace, alpha: f64, p: f64) -> Result<Estimate> {
        self.get(format!("cinj_via_gamma|{space}|{alpha}|{p}"), |s| {
            constants::cinj_via_gamma(space, alpha, p, s)
        })
    }

    pub fn gamma_p(&self, space: &NormedSpace, p: f64, t: f64) -> Result<Estimate> {
        self.get(format!("gamma_p|{space}|{p}|{t}"), |s| constants::gamma_p(space, p, t, s))
    }

    pub fn cnj_p(&self, space: &NormedSpace, p: f64) -> Result<Estimate> {
        self.get(format!("cnj_p|{space}|{p}"), |s| {
            constants::cnj_p(space, p, s, constants::DEFAULT_T_GRID)
        })
    }

    pub fn cnj_modified_p(&self, space: &NormedSpace, p: f64) -> Result<Estimate> {
        self.get(format!("cnj_modified_p|{space}|{p}"), |s| constants::cnj_modified_p(space, p, s))
    }

    pub fn rho(&self, space: &NormedSpace, t: f64) -> Result<Estimate> {
        self.get(format!("rho|{space}|{t}"), |s| constants::rho(space, t, s))
    }

    pub fn james(&self, space: &NormedSpace) -> Result<Estimate> {
        self.get(format!("james|{space}"), |s| constants::james(space, s))
    }
}
