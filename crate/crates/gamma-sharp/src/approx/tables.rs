//! Correction constants as generated source.
//!
//! DO NOT EDIT BY HAND. Regenerate with
//! `cargo run --example generate-constants > crates/gamma-sharp/src/approx/tables.rs`.
//! A test (`approx::tests::tables_match_fresh_derivation`) fails if this
//! file drifts from what the solver derives.

/// One solved correction level: display constants plus the exact
/// monic denominator (coefficients low-to-high, leading 1 included).
pub struct LevelTable {
    pub constants: &'static [(&'static str, &'static str)],
    pub kappa: &'static str,
    pub denom: &'static [&'static str],
    pub summed: bool,
    pub survivor_order: i64,
    pub survivor_coeff: &'static str,
}

pub struct FamilyTable {
    pub family_id: &'static str,
    pub truncation_order: i64,
    pub levels: &'static [LevelTable],
}

pub const TABLES: &[FamilyTable] = &[
    FamilyTable {
        family_id: "gosper-cf",
        truncation_order: 18,
        levels: &[
            LevelTable {
                constants: &[
                    ("kappa_0", "1/72"),
                    ("lambda_0", "31/90"),
                ],
                kappa: "1/72",
                denom: &[
                    "31/90",
                    "1",
                ],
                summed: false,
                survivor_order: 5,
                survivor_coeff: "5929/1166400",
            },
            LevelTable {
                constants: &[
                    ("kappa_1", "5929/32400"),
                    ("lambda_1", "481937/3735270"),
                ],
                kappa: "5929/32400",
                denom: &[
                    "481937/3735270",
                    "1",
                ],
                summed: false,
                survivor_order: 7,
                survivor_coeff: "-76899172249/32530914662400",
            },
            LevelTable {
                constants: &[
                    ("kappa_2", "76899172249/248039857296"),
                    ("lambda_2", "7745462509019287/19149278075101482"),
                ],
                kappa: "76899172249/248039857296",
                denom: &[
                    "7745462509019287/19149278075101482",
                    "1",
                ],
                summed: false,
                survivor_order: 9,
                survivor_coeff: "132716042717259438649/45568029057931028275200",
            },
            LevelTable {
                constants: &[
                    ("kappa_3", "786873417270631211749921/851541507731717527392144"),
                    ("lambda_3", "2098335745817751685364201067279071/30311088872486921466334781589254970"),
                ],
                kappa: "786873417270631211749921/851541507731717527392144",
                denom: &[
                    "2098335745817751685364201067279071/30311088872486921466334781589254970",
                    "1",
                ],
                summed: false,
                survivor_order: 11,
                survivor_coeff: "-8582206812097017962194830199417252681/2219856393375936889886524772125310976000",
            },
        ],
    },
    FamilyTable {
        family_id: "gosper-product",
        truncation_order: 18,
        levels: &[
            LevelTable {
                constants: &[
                    ("kappa_0", "-1/144"),
                    ("lambda_0", "4007/21600"),
                ],
                kappa: "-1/144",
                denom: &[
                    "16253/64800",
                    "23/45",
                    "1",
                ],
                summed: false,
                survivor_order: 6,
                survivor_coeff: "2197/9185400",
            },
            LevelTable {
                constants: &[
                    ("kappa_1", "4394/637875"),
                    ("lambda_1", "130311599/15575040"),
                ],
                kappa: "4394/637875",
                denom: &[
                    "130311599/15575040",
                    "1",
                ],
                summed: false,
                survivor_order: 8,
                survivor_coeff: "-315776595937/14309790842880",
            },
            LevelTable {
                constants: &[
                    ("kappa_2", "7894414898425/119793516544"),
                    ("lambda_2", "-265702682899837009577/34427631789478287360"),
                ],
                kappa: "7894414898425/119793516544",
                denom: &[
                    "-265702682899837009577/34427631789478287360",
                    "1",
                ],
                summed: false,
                survivor_order: 10,
                survivor_coeff: "463271691711939984828727/664086294982055107504742400",
            },
            LevelTable {
                constants: &[
                    ("kappa_3", "1897560849252106177858465792/77174813342532578267347147395"),
                    ("lambda_3", "30320380455616293004898928163131563244811979/6134364315672065325746652708240298034227200"),
                ],
                kappa: "1897560849252106177858465792/77174813342532578267347147395",
                denom: &[
                    "30320380455616293004898928163131563244811979/6134364315672065325746652708240298034227200",
                    "1",
                ],
                summed: false,
                survivor_order: 12,
                survivor_coeff: "-21203284172543881958375615319145937386424922088013/1060999026028437625323007510430315407365636096000000",
            },
        ],
    },
    FamilyTable {
        family_id: "ramanujan-cf",
        truncation_order: 18,
        levels: &[
            LevelTable {
                constants: &[
                    ("a_0", "-11/240"),
                    ("b_0", "79/154"),
                ],
                kappa: "-11/240",
                denom: &[
                    "79/154",
                    "1",
                ],
                summed: false,
                survivor_order: 7,
                survivor_coeff: "-459733/124185600",
            },
            LevelTable {
                constants: &[
                    ("a_1", "459733/711480"),
                    ("b_1", "-1455925/70798882"),
                ],
                kappa: "459733/711480",
                denom: &[
                    "-1455925/70798882",
                    "1",
                ],
                summed: false,
                survivor_order: 9,
                survivor_coeff: "644167196629/266924657664000",
            },
            LevelTable {
                constants: &[
                    ("a_2", "49600874140433/101450127018720"),
                    ("b_2", "10259108965771635091/19545564575317443762"),
                ],
                kappa: "49600874140433/101450127018720",
                denom: &[
                    "10259108965771635091/19545564575317443762",
                    "1",
                ],
                summed: false,
                survivor_order: 11,
                survivor_coeff: "-367790228972365540719311/72987334885374049360281600",
            },
            LevelTable {
                constants: &[
                    ("a_3", "169085305336152527131511003963/101221579151797375403194730976"),
                    ("b_3", "-6141448535908002711219920016488834171/203275987838924050801436670299517447102"),
                ],
                kappa: "169085305336152527131511003963/101221579151797375403194730976",
                denom: &[
                    "-6141448535908002711219920016488834171/203275987838924050801436670299517447102",
                    "1",
                ],
                summed: false,
                survivor_order: 13,
                survivor_coeff: "3972982151904994543263657138463215135127/448168313095672004722528237938286264320000",
            },
        ],
    },
    FamilyTable {
        family_id: "ramanujan-mixed",
        truncation_order: 14,
        levels: &[
            LevelTable {
                constants: &[
                    ("kappa_0", "-11/240"),
                    ("lambda_0", "79/154"),
                ],
                kappa: "-11/240",
                denom: &[
                    "79/154",
                    "1",
                ],
                summed: false,
                survivor_order: 7,
                survivor_coeff: "-459733/124185600",
            },
            LevelTable {
                constants: &[
                    ("kappa_1", "459733/15523200"),
                    ("lambda_10", "71181889/70798882"),
                    ("lambda_11", "717183502490887/520777318696096"),
                    ("lambda_12", "1118629052995381153799/1958878792277282473920"),
                ],
                kappa: "459733/15523200",
                denom: &[
                    "1118629052995381153799/1958878792277282473920",
                    "717183502490887/520777318696096",
                    "71181889/70798882",
                    "1",
                ],
                summed: true,
                survivor_order: 11,
                survivor_coeff: "-129437053637916804383351199371/25688735228241855305526096691200",
            },
        ],
    },
];
