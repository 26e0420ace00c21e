//! Browser bindings: three operations returning JSON strings.
//!
//! Inputs are rational literals as typed by the user (`"1/2"`, `"-3"`,
//! `"1,0,2/3"`); every function fails with a readable message instead of
//! panicking.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use clausen_core::clausen::{ClausenParams, PerturbationInput};
use clausen_core::rational::parse_list;
use clausen_core::verify::{self, Comparison, VerifyReport};
use clausen_core::{RatPoly, Rational};

const SAMPLES: usize = 121;

#[derive(Serialize)]
struct CharPolyView {
    report: VerifyReport,
    /// `P(t)` at evenly spaced `t` in `[0, 2m + 4]`, as floats for plotting.
    samples: Vec<(f64, f64)>,
    /// `P(k)` at the integers `0..=2m+4`, exact.
    integer_values: Vec<Rational>,
}

#[derive(Serialize)]
struct ComparisonView {
    report: VerifyReport,
    rows: Vec<Comparison>,
}

fn params(a: &str, b: &str, m: u32) -> Result<ClausenParams, String> {
    let a: Rational = a.trim().parse().map_err(|e| format!("a: {e}"))?;
    let b: Rational = b.trim().parse().map_err(|e| format!("b: {e}"))?;
    ClausenParams::new(a, b, m as usize).map_err(|e| e.to_string())
}

fn perturbation(sigma: &str) -> Result<PerturbationInput, String> {
    let sigma = parse_list(sigma).map_err(|e| format!("sigma: {e}"))?;
    PerturbationInput::new(sigma).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn samples(poly: &RatPoly, upto: usize) -> Vec<(f64, f64)> {
    let coeffs: Vec<f64> = poly.coeffs().iter().map(Rational::to_f64).collect();
    (0..SAMPLES)
        .map(|i| {
            let t = upto as f64 * i as f64 / (SAMPLES - 1) as f64;
            (t, coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c))
        })
        .collect()
}

pub fn char_poly_json(a: &str, b: &str, m: u32) -> Result<String, String> {
    let p = params(a, b, m)?;
    let report = verify::check_char_poly(&p);
    let poly = report.polynomial.clone().ok_or_else(|| report.reason.clone().unwrap_or_default())?;
    let upto = 2 * p.m + 4;
    to_json(&CharPolyView {
        samples: samples(&poly, upto),
        integer_values: (0..=upto).map(|k| poly.eval(&Rational::from(k))).collect(),
        report,
    })
}

pub fn verify_product_json(a: &str, b: &str, m: u32, sigma: &str, terms: u32) -> Result<String, String> {
    let p = params(a, b, m)?;
    let f = perturbation(sigma)?;
    let report = verify::verify_product(&p, &f, terms as usize);
    let rows = report.rows.clone();
    to_json(&ComparisonView { report, rows })
}

pub fn beyond_bound_json(a: &str, b: &str, m: u32, sigma: &str) -> Result<String, String> {
    let p = params(a, b, m)?;
    let f = perturbation(sigma)?;
    let report = verify::verify_product_beyond_bound(&p, &f);
    let rows = report.rows.clone();
    to_json(&ComparisonView { report, rows })
}

/// `P_{2m}^{a,b}` with exact values at small integers and float samples.
#[wasm_bindgen]
pub fn char_poly(a: &str, b: &str, m: u32) -> Result<String, JsError> {
    char_poly_json(a, b, m).map_err(|e| JsError::new(&e))
}

/// Coefficientwise check of the perturbed product formula.
#[wasm_bindgen]
pub fn verify_product(a: &str, b: &str, m: u32, sigma: &str, terms: u32) -> Result<String, JsError> {
    verify_product_json(a, b, m, sigma, terms).map_err(|e| JsError::new(&e))
}

/// The interpolated polynomial substituted into the product formula
/// whatever the perturbation degree; shows where agreement stops.
#[wasm_bindgen]
pub fn beyond_bound(a: &str, b: &str, m: u32, sigma: &str) -> Result<String, JsError> {
    beyond_bound_json(a, b, m, sigma).map_err(|e| JsError::new(&e))
}
