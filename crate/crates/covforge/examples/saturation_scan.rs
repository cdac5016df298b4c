//! Scanning degrees for the saturation index: the least degree from which
//! the covariant-coefficient ideal agrees with the full defining ideal.
//!
//! Run with: cargo run --release --example saturation_scan

use covforge::ideals::{saturation_scan, ScanConfig};

fn main() {
    for (r, d, m_max) in [(2usize, 4usize, 5usize), (2, 6, 8)] {
        let report = saturation_scan(r, d, m_max, ScanConfig::default()).unwrap();
        println!("scan for (r,d) = ({r},{d}) up to degree {m_max}:");
        println!("  m   dim J_m   dim (I_X)_m   equal");
        for row in &report.rows {
            println!(
                "  {:<3} {:<9} {:<13} {}",
                row.m, row.dim_j, row.dim_ix, row.equal
            );
        }
        match report.candidate_si {
            Some(si) => println!("  candidate SI({r},{d}) = {si} (verified up to {m_max})\n"),
            None => println!("  no equality in range\n"),
        }
    }
}
