//! Tool-wide configuration: constants, tolerances, grid densities, caps.

use serde::{Deserialize, Serialize};

/// Configuration shared by all operations. Every report embeds a copy.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ToolConfig {
    /// Absolute constant in the de la Vellee Poussin style variation bound.
    pub c_constant: f64,
    /// Default truncation order for Taylor steps and coefficient extraction.
    pub taylor_order: usize,
    /// Grid density per dimension for skeleton sampling and validation.
    pub grid: usize,
    /// Numeric tolerance for continuation and quadrature.
    pub tol: f64,
    /// Seed for the deterministic sample generators.
    pub seed: u64,
    /// Safety factor applied to sampled sup bounds.
    pub sup_safety: f64,
    /// Total-degree cap for Groebner computations.
    pub groebner_degree_cap: u32,
    /// Iteration cap for the ascending-chain ODE derivation.
    pub ode_iter_cap: usize,
    /// Window scan limit: |p|, |q| up to this value.
    pub window_scan: i32,
    /// Floor for fitted domination constants M.
    pub m_floor: f64,
    /// Maximum bisection depth for zero localization.
    pub subdivision_floor: usize,
    /// Sampled sup cap accepted for restricted quotients f/g.
    pub div_sup_cap: f64,
}

impl Default for ToolConfig {
    fn default() -> Self {
        ToolConfig {
            c_constant: 2.0,
            taylor_order: 20,
            grid: 64,
            tol: 1e-12,
            seed: 0,
            sup_safety: 1.2,
            groebner_degree_cap: 40,
            ode_iter_cap: 64,
            window_scan: 12,
            m_floor: 1.01,
            subdivision_floor: 40,
            div_sup_cap: 1e9,
        }
    }
}

impl ToolConfig {
    /// Apply a `key=value` override; returns false for unknown keys.
    pub fn set(&mut self, key: &str, value: &str) -> bool {
        macro_rules! parse {
            ($field:expr) => {
                match value.parse() {
                    Ok(v) => {
                        $field = v;
                        true
                    }
                    Err(_) => false,
                }
            };
        }
        match key {
            "C" | "c_constant" => parse!(self.c_constant),
            "taylor_order" => parse!(self.taylor_order),
            "grid" => parse!(self.grid),
            "tol" => parse!(self.tol),
            "seed" => parse!(self.seed),
            "sup_safety" | "safety" => parse!(self.sup_safety),
            "groebner_degree_cap" => parse!(self.groebner_degree_cap),
            "ode_iter_cap" => parse!(self.ode_iter_cap),
            "window_scan" => parse!(self.window_scan),
            "m_floor" => parse!(self.m_floor),
            "subdivision_floor" => parse!(self.subdivision_floor),
            "div_sup_cap" => parse!(self.div_sup_cap),
            _ => false,
        }
    }
}
