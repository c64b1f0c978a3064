//! Named fixture store. Every fixture is a JSON file embedded at compile
//! time, pinned by a sha256 manifest, and decoded on demand into the typed
//! object it holds. Setting CATALOG_FIXTURE_DIR reads the files from that
//! directory instead; the checksums still apply.

use std::path::Path;
use std::sync::OnceLock;

use diffops::DiffOperator;
use exactcore::multipoly::MultiPoly;
use exactcore::serial::MultiPolyDto;
use exactcore::{Error, Result};
use correlations::ekpoly::{EKPolynomial, EKPolynomialDto};
use diffops::serial::OperatorDto;
use painleve::{HamiltonianData, JimboData, ParamData, RiccatiData};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::payload::{HamiltonianPQDto, JimboTableDto, ParamDto, RiccatiDto};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Operator,
    EkForm,
    Curve,
    Parametrization,
    Riccati,
    HamiltonianPq,
    JimboTable,
}

impl FixtureKind {
    pub fn label(self) -> &'static str {
        match self {
            FixtureKind::Operator => "operator",
            FixtureKind::EkForm => "ek_form",
            FixtureKind::Curve => "curve",
            FixtureKind::Parametrization => "parametrization",
            FixtureKind::Riccati => "riccati",
            FixtureKind::HamiltonianPq => "hamiltonian_pq",
            FixtureKind::JimboTable => "jimbo_table",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
enum FixturePayload {
    Operator(OperatorDto),
    EkForm(EKPolynomialDto),
    Curve(MultiPolyDto),
    Parametrization(ParamDto),
    Riccati(RiccatiDto),
    HamiltonianPq(HamiltonianPQDto),
    JimboTable(JimboTableDto),
}

/// One loaded fixture; accessors decode the payload into the matching
/// working type and reject every other kind.
#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub provenance: String,
    #[serde(flatten)]
    payload: FixturePayload,
}

impl Fixture {
    pub fn kind(&self) -> FixtureKind {
        match &self.payload {
            FixturePayload::Operator(_) => FixtureKind::Operator,
            FixturePayload::EkForm(_) => FixtureKind::EkForm,
            FixturePayload::Curve(_) => FixtureKind::Curve,
            FixturePayload::Parametrization(_) => FixtureKind::Parametrization,
            FixturePayload::Riccati(_) => FixtureKind::Riccati,
            FixturePayload::HamiltonianPq(_) => FixtureKind::HamiltonianPq,
            FixturePayload::JimboTable(_) => FixtureKind::JimboTable,
        }
    }

    fn kind_error(&self, wanted: &str) -> Error {
        Error::Unsupported(format!(
            "fixture {:?} holds a {}, not a {wanted}",
            self.name,
            self.kind().label()
        ))
    }

    pub fn operator(&self) -> Result<DiffOperator> {
        match &self.payload {
            FixturePayload::Operator(dto) => DiffOperator::try_from(dto),
            _ => Err(self.kind_error("operator")),
        }
    }

    pub fn ek_form(&self) -> Result<EKPolynomial> {
        match &self.payload {
            FixturePayload::EkForm(dto) => EKPolynomial::try_from(dto),
            _ => Err(self.kind_error("ek_form")),
        }
    }

    pub fn curve(&self) -> Result<MultiPoly> {
        match &self.payload {
            FixturePayload::Curve(dto) => MultiPoly::try_from(dto),
            _ => Err(self.kind_error("curve")),
        }
    }

    pub fn parametrization(&self) -> Result<ParamData> {
        match &self.payload {
            FixturePayload::Parametrization(dto) => ParamData::try_from(dto),
            _ => Err(self.kind_error("parametrization")),
        }
    }

    pub fn riccati(&self) -> Result<RiccatiData> {
        match &self.payload {
            FixturePayload::Riccati(dto) => RiccatiData::try_from(dto),
            _ => Err(self.kind_error("riccati")),
        }
    }

    pub fn hamiltonian_pq(&self) -> Result<HamiltonianData> {
        match &self.payload {
            FixturePayload::HamiltonianPq(dto) => HamiltonianData::try_from(dto),
            _ => Err(self.kind_error("hamiltonian_pq")),
        }
    }

    pub fn jimbo_table(&self) -> Result<JimboData> {
        match &self.payload {
            FixturePayload::JimboTable(dto) => JimboData::try_from(dto),
            _ => Err(self.kind_error("jimbo_table")),
        }
    }
}

struct Entry {
    name: &'static str,
    file: &'static str,
    json: &'static str,
}

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(Entry {
            name: $name,
            file: concat!($name, ".json"),
            json: include_str!(concat!("../fixtures/", $name, ".json")),
        }),*]
    };
}

/// Alphabetical, case-sensitive; must list every file next to manifest.json.
static ENTRIES: &[Entry] = entries![
    "A2",
    "C01",
    "C13_P1",
    "C13_P3",
    "C22",
    "C22S",
    "C33",
    "JIMBO_ISING_N1",
    "L1",
    "L11",
    "L12",
    "L22",
    "L3",
    "L33",
    "L44",
    "L55",
    "L66",
    "LE",
    "NAPPE22",
    "PARAM_N2",
    "PQ_N2",
    "R2",
    "RATIO_N3",
    "RICCATI_N2",
    "l0",
    "l1",
    "l1_conjugated",
];

static MANIFEST_JSON: &str = include_str!("../fixtures/manifest.json");

/// One manifest row: file identity and content hash for a fixture.
#[derive(Debug, Clone, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub kind: String,
    pub provenance: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Deserialize)]
struct Manifest {
    fixtures: Vec<ManifestEntry>,
}

fn manifest() -> Result<&'static Manifest> {
    static CELL: OnceLock<std::result::Result<Manifest, String>> = OnceLock::new();
    let parsed = CELL.get_or_init(|| {
        serde_json::from_str::<Manifest>(MANIFEST_JSON).map_err(|e| e.to_string())
    });
    parsed
        .as_ref()
        .map_err(|e| Error::Parse(format!("fixture manifest is unreadable: {e}")))
}

/// Manifest rows, one per fixture, sorted by name.
pub fn manifest_entries() -> Result<&'static [ManifestEntry]> {
    Ok(&manifest()?.fixtures)
}

/// All fixture names, sorted.
pub fn fixture_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

fn sha256_hex(text: &str) -> String {
    use std::fmt::Write;
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        write!(out, "{byte:02x}").expect("writing to a string cannot fail");
    }
    out
}

/// Loads a fixture by name, verifying its checksum against the manifest
/// before decoding.
pub fn fixture(name: &str) -> Result<Fixture> {
    let entry = ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| {
        Error::Unsupported(format!(
            "no such fixture {name:?}; available: {}",
            fixture_names().join(", ")
        ))
    })?;
    let text = match std::env::var("CATALOG_FIXTURE_DIR") {
        Ok(dir) => std::fs::read_to_string(Path::new(&dir).join(entry.file))
            .map_err(|e| Error::Parse(format!("cannot read fixture file {}: {e}", entry.file)))?,
        Err(_) => entry.json.to_string(),
    };
    let row = manifest()?
        .fixtures
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::Parse(format!("fixture {name:?} missing from the manifest")))?;
    let hash = sha256_hex(&text);
    if hash != row.sha256 {
        return Err(Error::Parse(format!(
            "fixture {name:?} fails its checksum: manifest {} vs content {hash}",
            row.sha256
        )));
    }
    let fx: Fixture = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("fixture {name:?} is unreadable: {e}")))?;
    if fx.name != name {
        return Err(Error::Parse(format!(
            "fixture file {} declares name {:?}",
            entry.file, fx.name
        )));
    }
    if fx.kind().label() != row.kind {
        return Err(Error::Parse(format!(
            "fixture {name:?} declares kind {}, manifest says {}",
            fx.kind().label(),
            row.kind
        )));
    }
    Ok(fx)
}
