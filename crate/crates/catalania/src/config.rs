//! JSON grid configuration for `verify`.
//!
//! Every section is optional; an absent section is not run. Ranges are
//! inclusive and written with rational strings:
//!
//! ```json
//! { "alternating": { "alpha": { "from": "-3", "to": "5" }, "beta": { "from": "0", "to": "4" },
//!                    "gamma": { "from": "-2", "to": "4", "step": "1/2" }, "n_max": 12 } }
//! ```

use std::path::Path;

use catalania_core::identities::{
    AlternatingGrid, ConvolutionGrid, Fault, GouldGrid, InvolutionGrid, RatRange, SeriesGrid, SuiteConfig, VectorGrid,
    VectorInvolutionGrid,
};
use catalania_core::Rat;
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RangeDto {
    pub from: String,
    pub to: String,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub step: String,
}

fn one() -> String {
    "1".into()
}

fn is_one(s: &String) -> bool {
    s == "1"
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DeltaDto {
    pub n_max: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlternatingDto {
    pub alpha: RangeDto,
    pub beta: RangeDto,
    pub gamma: RangeDto,
    pub n_max: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RiordanDto {
    pub alpha: RangeDto,
    pub beta: RangeDto,
    pub gamma: RangeDto,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct VectorDto {
    pub outdegrees: Vec<Vec<usize>>,
    pub gamma: RangeDto,
    pub alpha: RangeDto,
    pub n_max_total: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SeriesDto {
    pub beta: RangeDto,
    pub gamma: RangeDto,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClosedFormDto {
    pub beta: RangeDto,
    pub gamma: RangeDto,
    pub n_max: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConvolutionDto {
    pub beta: RangeDto,
    pub alpha1: RangeDto,
    pub alpha2: RangeDto,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GouldDto {
    pub a: RangeDto,
    pub m: RangeDto,
    pub z: RangeDto,
    pub sequences: usize,
    pub length: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InvolutionDto {
    pub beta: RangeDto,
    pub gamma: RangeDto,
    pub alpha_minus_gamma: RangeDto,
    pub n_max: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct VectorInvolutionDto {
    pub outdegrees: Vec<Vec<usize>>,
    pub gamma: RangeDto,
    pub alpha_minus_gamma: RangeDto,
    pub n_max_total: usize,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum FaultDto {
    CatalanOffByOne,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConfigDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalan_alternating: Option<DeltaDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternating: Option<AlternatingDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<VectorDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub riordan: Option<RiordanDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functional: Option<SeriesDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convolution: Option<ConvolutionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gould_roundtrip: Option<GouldDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gould_inversion: Option<AlternatingDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector_involution: Option<VectorInvolutionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_method: Option<InvolutionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<FaultDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_structs: Option<u64>,
}

fn rat(s: &str) -> Result<Rat, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("config: {e}")))
}

impl RangeDto {
    fn to_core(&self) -> Result<RatRange, Failure> {
        RatRange::new(rat(&self.from)?, rat(&self.to)?, rat(&self.step)?).map_err(|e| Failure::Usage(format!("config: {e}")))
    }

    fn from_core(r: &RatRange) -> Self {
        RangeDto { from: r.from.to_string(), to: r.to.to_string(), step: r.step.to_string() }
    }
}

impl ConfigDto {
    pub fn to_core(&self) -> Result<SuiteConfig, Failure> {
        let alternating = |g: &AlternatingDto| -> Result<AlternatingGrid, Failure> {
            Ok(AlternatingGrid { alpha: g.alpha.to_core()?, beta: g.beta.to_core()?, gamma: g.gamma.to_core()?, n_max: g.n_max })
        };
        let involution = |g: &InvolutionDto| -> Result<InvolutionGrid, Failure> {
            Ok(InvolutionGrid {
                beta: g.beta.to_core()?,
                gamma: g.gamma.to_core()?,
                alpha_offset: g.alpha_minus_gamma.to_core()?,
                n_max: g.n_max,
            })
        };
        Ok(SuiteConfig {
            catalan_alternating: self.catalan_alternating.as_ref().map(|d| d.n_max),
            alternating: self.alternating.as_ref().map(alternating).transpose()?,
            vector: self
                .vector
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(VectorGrid {
                        outdegrees: g.outdegrees.clone(),
                        gamma: g.gamma.to_core()?,
                        alpha: g.alpha.to_core()?,
                        n_max_total: g.n_max_total,
                    })
                })
                .transpose()?,
            riordan: self
                .riordan
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(AlternatingGrid { alpha: g.alpha.to_core()?, beta: g.beta.to_core()?, gamma: g.gamma.to_core()?, n_max: g.order })
                })
                .transpose()?,
            functional: self
                .functional
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(SeriesGrid { beta: g.beta.to_core()?, gamma: g.gamma.to_core()?, order: g.order })
                })
                .transpose()?,
            convolution: self
                .convolution
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(ConvolutionGrid {
                        beta: g.beta.to_core()?,
                        alpha1: g.alpha1.to_core()?,
                        alpha2: g.alpha2.to_core()?,
                        order: g.order,
                    })
                })
                .transpose()?,
            gould_roundtrip: self
                .gould_roundtrip
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(GouldGrid {
                        a: g.a.to_core()?,
                        m: g.m.to_core()?,
                        z: g.z.to_core()?,
                        sequences: g.sequences,
                        length: g.length,
                        seed: g.seed,
                    })
                })
                .transpose()?,
            gould_inversion: self.gould_inversion.as_ref().map(alternating).transpose()?,
            closed_form: self
                .closed_form
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(SeriesGrid { beta: g.beta.to_core()?, gamma: g.gamma.to_core()?, order: g.n_max })
                })
                .transpose()?,
            involution: self.involution.as_ref().map(involution).transpose()?,
            vector_involution: self
                .vector_involution
                .as_ref()
                .map(|g| -> Result<_, Failure> {
                    Ok(VectorInvolutionGrid {
                        outdegrees: g.outdegrees.clone(),
                        gamma: g.gamma.to_core()?,
                        alpha_offset: g.alpha_minus_gamma.to_core()?,
                        n_max_total: g.n_max_total,
                    })
                })
                .transpose()?,
            cross_method: self.cross_method.as_ref().map(involution).transpose()?,
            fault: self.fault.map(|f| match f {
                FaultDto::CatalanOffByOne => Fault::CatalanOffByOne,
            }),
            max_structs: self.max_structs,
        })
    }

    pub fn from_core(c: &SuiteConfig) -> Self {
        let r = RangeDto::from_core;
        let alternating =
            |g: &AlternatingGrid| AlternatingDto { alpha: r(&g.alpha), beta: r(&g.beta), gamma: r(&g.gamma), n_max: g.n_max };
        let involution = |g: &InvolutionGrid| InvolutionDto {
            beta: r(&g.beta),
            gamma: r(&g.gamma),
            alpha_minus_gamma: r(&g.alpha_offset),
            n_max: g.n_max,
        };
        ConfigDto {
            catalan_alternating: c.catalan_alternating.map(|n_max| DeltaDto { n_max }),
            alternating: c.alternating.as_ref().map(alternating),
            vector: c.vector.as_ref().map(|g| VectorDto {
                outdegrees: g.outdegrees.clone(),
                gamma: r(&g.gamma),
                alpha: r(&g.alpha),
                n_max_total: g.n_max_total,
            }),
            riordan: c.riordan.as_ref().map(|g| RiordanDto {
                alpha: r(&g.alpha),
                beta: r(&g.beta),
                gamma: r(&g.gamma),
                order: g.n_max,
            }),
            functional: c.functional.as_ref().map(|g| SeriesDto { beta: r(&g.beta), gamma: r(&g.gamma), order: g.order }),
            convolution: c.convolution.as_ref().map(|g| ConvolutionDto {
                beta: r(&g.beta),
                alpha1: r(&g.alpha1),
                alpha2: r(&g.alpha2),
                order: g.order,
            }),
            gould_roundtrip: c.gould_roundtrip.as_ref().map(|g| GouldDto {
                a: r(&g.a),
                m: r(&g.m),
                z: r(&g.z),
                sequences: g.sequences,
                length: g.length,
                seed: g.seed,
            }),
            gould_inversion: c.gould_inversion.as_ref().map(alternating),
            closed_form: c.closed_form.as_ref().map(|g| ClosedFormDto { beta: r(&g.beta), gamma: r(&g.gamma), n_max: g.order }),
            involution: c.involution.as_ref().map(involution),
            vector_involution: c.vector_involution.as_ref().map(|g| VectorInvolutionDto {
                outdegrees: g.outdegrees.clone(),
                gamma: r(&g.gamma),
                alpha_minus_gamma: r(&g.alpha_offset),
                n_max_total: g.n_max_total,
            }),
            cross_method: c.cross_method.as_ref().map(involution),
            fault: c.fault.map(|f| match f {
                Fault::CatalanOffByOne => FaultDto::CatalanOffByOne,
            }),
            max_structs: c.max_structs,
        }
    }
}

pub fn parse_config(text: &str) -> Result<SuiteConfig, Failure> {
    let dto: ConfigDto = serde_json::from_str(text).map_err(|e| Failure::Usage(format!("config: {e}")))?;
    dto.to_core()
}

pub fn load_config(path: &Path) -> Result<SuiteConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

/// The built-in default grid as pretty JSON.
pub fn default_config_json() -> String {
    let mut s = serde_json::to_string_pretty(&ConfigDto::from_core(&SuiteConfig::standard())).expect("plain data");
    s.push('\n');
    s
}
