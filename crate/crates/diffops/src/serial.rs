//! JSON-friendly operator transfer type.

use crate::op::DiffOperator;
use exactcore::serial::RatFunDto;
use exactcore::series::Var;
use exactcore::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorDto {
    pub variable: String,
    pub order: usize,
    /// Ascending in derivative order; length `order + 1` unless zero.
    pub coefficients: Vec<RatFunDto>,
}

impl From<&DiffOperator> for OperatorDto {
    fn from(op: &DiffOperator) -> Self {
        OperatorDto {
            variable: op.variable().name().to_string(),
            order: op.order().unwrap_or(0),
            coefficients: op.coeffs().iter().map(RatFunDto::from).collect(),
        }
    }
}

impl TryFrom<&OperatorDto> for DiffOperator {
    type Error = Error;

    fn try_from(d: &OperatorDto) -> Result<DiffOperator> {
        let var = Var::parse(&d.variable)?;
        let coeffs = d
            .coefficients
            .iter()
            .map(exactcore::ratfun::RationalFunction::try_from)
            .collect::<Result<Vec<_>>>()?;
        let op = DiffOperator::new(var, coeffs);
        if let Some(ord) = op.order() {
            if ord != d.order {
                return Err(Error::Parse(format!(
                    "operator order {} does not match declared {}",
                    ord, d.order
                )));
            }
        }
        Ok(op)
    }
}
