//! Regenerates `src/approx/tables.rs` from the derivation engine, so the
//! embedded constants are never hand-typed. Usage:
//!
//! ```sh
//! cargo run --example generate-constants > crates/gamma-sharp/src/approx/tables.rs
//! ```
//!
//! A unit test asserts the checked-in file equals a fresh derivation.

use gamma_sharp::correction::{derive_family, Attachment, Family};
use gamma_sharp::kernel::rat_string;

fn main() {
    let mut out = String::new();
    out.push_str(
        "//! Correction constants as generated source.\n//!\n\
         //! DO NOT EDIT BY HAND. Regenerate with\n\
         //! `cargo run --example generate-constants > crates/gamma-sharp/src/approx/tables.rs`.\n\
         //! A test (`approx::tests::tables_match_fresh_derivation`) fails if this\n\
         //! file drifts from what the solver derives.\n\n\
         /// One solved correction level: display constants plus the exact\n\
         /// monic denominator (coefficients low-to-high, leading 1 included).\n\
         pub struct LevelTable {\n\
         \x20   pub constants: &'static [(&'static str, &'static str)],\n\
         \x20   pub kappa: &'static str,\n\
         \x20   pub denom: &'static [&'static str],\n\
         \x20   pub summed: bool,\n\
         \x20   pub survivor_order: i64,\n\
         \x20   pub survivor_coeff: &'static str,\n\
         }\n\n\
         pub struct FamilyTable {\n\
         \x20   pub family_id: &'static str,\n\
         \x20   pub truncation_order: i64,\n\
         \x20   pub levels: &'static [LevelTable],\n\
         }\n\n\
         pub const TABLES: &[FamilyTable] = &[\n",
    );
    for family in Family::ALL {
        let rec = derive_family(family, family.max_depth(), false)
            .expect("derivation of a published family must succeed");
        out.push_str(&format!(
            "    FamilyTable {{\n        family_id: {:?},\n        truncation_order: {},\n        levels: &[\n",
            family.id(),
            rec.truncation_order
        ));
        for (lr, sl) in rec.levels.iter().zip(rec.solved.iter()) {
            out.push_str("            LevelTable {\n                constants: &[\n");
            for c in &lr.constants {
                out.push_str(&format!(
                    "                    ({:?}, {:?}),\n",
                    c.name,
                    rat_string(&c.value)
                ));
            }
            out.push_str("                ],\n");
            out.push_str(&format!(
                "                kappa: {:?},\n                denom: &[\n",
                rat_string(&sl.kappa)
            ));
            for c in sl.denom.coeffs() {
                out.push_str(&format!("                    {:?},\n", rat_string(c)));
            }
            out.push_str(&format!(
                "                ],\n                summed: {},\n                survivor_order: {},\n                survivor_coeff: {:?},\n            }},\n",
                sl.attachment == Attachment::Summed,
                lr.survivor_order,
                rat_string(&lr.survivor_coeff)
            ));
        }
        out.push_str("        ],\n    },\n");
    }
    out.push_str("];\n");
    print!("{out}");
}
