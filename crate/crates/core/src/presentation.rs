//! Algebra presentations `⟨X | R⟩` with an evaluation-point augmentation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::word::{Alphabet, Word};

/// Generators, a graded monomial order, relations and the augmentation point.
///
/// The augmentation `ε` evaluates every generator at a scalar; its section
/// `η` sends `1` to the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    order: MonomialOrder,
    field: Field,
    relations: Vec<Polynomial>,
    augmentation: Vec<FieldElement>,
}

/// On-disk JSON form of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<BTreeMap<String, CoefficientText>>,
}

/// A coefficient written either as a JSON string (`"3"`, `"-1/2"`) or as a
/// JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientText {
    Text(String),
    Integer(i64),
}

impl CoefficientText {
    fn parse(&self, field: &Field) -> Result<FieldElement> {
        match self {
            CoefficientText::Text(s) => field.parse(s),
            CoefficientText::Integer(n) => Ok(field.from_i64(*n)),
        }
    }
}

impl Presentation {
    /// Builds and validates a presentation. `augmentation[i]` is `ε` of
    /// letter `i`.
    pub fn new(
        alphabet: Alphabet,
        order: MonomialOrder,
        field: Field,
        relations: Vec<Polynomial>,
        augmentation: Vec<FieldElement>,
    ) -> Result<Self> {
        let field = field.checked()?;
        if augmentation.len() != alphabet.len() {
            return Err(Error::InvalidAlphabet("augmentation must cover every generator".into()));
        }
        let pres = Presentation { alphabet, order, field, relations, augmentation };
        for r in &pres.relations {
            pres.validate_relation(r)?;
        }
        Ok(pres)
    }

    /// Presentation with the augmentation at the origin.
    pub fn with_zero_augmentation(
        alphabet: Alphabet,
        order: MonomialOrder,
        field: Field,
        relations: Vec<Polynomial>,
    ) -> Result<Self> {
        let aug = vec![field.zero(); alphabet.len()];
        Presentation::new(alphabet, order, field, relations, aug)
    }

    /// Deglex presentation over the rationals from relation strings.
    pub fn parse_deglex(generators: &[&str], relations: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(generators)?;
        let order = MonomialOrder::deglex(&alphabet);
        let field = Field::Rational;
        let rels = relations
            .iter()
            .map(|r| Polynomial::parse(r, &alphabet, &field))
            .collect::<Result<Vec<_>>>()?;
        Presentation::with_zero_augmentation(alphabet, order, field, rels)
    }

    fn validate_relation(&self, r: &Polynomial) -> Result<()> {
        let text = || r.format(&self.alphabet, &self.order);
        let lm = r.lm(&self.order).map_err(|_| Error::InvalidRelation {
            relation: "0".into(),
            reason: "relation is zero".into(),
        })?;
        if lm.len() < 2 {
            return Err(Error::InvalidRelation {
                relation: text(),
                reason: "leading monomial is a constant or a single generator; \
                         eliminate that generator from the presentation first"
                    .into(),
            });
        }
        if !self.augmentation_eval(r).is_zero() {
            return Err(Error::InvalidRelation {
                relation: text(),
                reason: "relation does not vanish at the augmentation point".into(),
            });
        }
        Ok(())
    }

    pub fn from_file(file: &PresentationFile) -> Result<Self> {
        let alphabet = Alphabet::new(&file.generators)?;
        let field = file.field.unwrap_or(Field::Rational).checked()?;
        let mut weights = vec![1u32; alphabet.len()];
        if let Some(ws) = &file.weights {
            for (name, &w) in ws {
                weights[alphabet.letter(name)? as usize] = w;
            }
        }
        let order = MonomialOrder::weighted(&alphabet, weights)?;
        let mut aug = vec![field.zero(); alphabet.len()];
        if let Some(points) = &file.augmentation {
            for (name, value) in points {
                aug[alphabet.letter(name)? as usize] = value.parse(&field)?;
            }
        }
        let relations = file
            .relations
            .iter()
            .map(|r| Polynomial::parse(r, &alphabet, &field))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, order, field, relations, aug)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Presentation::from_file(&file)
    }

    /// Canonical file form: every optional field written out.
    pub fn to_file(&self) -> PresentationFile {
        let names = self.alphabet.names();
        PresentationFile {
            generators: names.to_vec(),
            weights: Some(
                names.iter().cloned().zip(self.order.weights().iter().copied()).collect(),
            ),
            field: Some(self.field),
            relations: self
                .relations
                .iter()
                .map(|r| r.format(&self.alphabet, &self.order))
                .collect(),
            augmentation: Some(
                names
                    .iter()
                    .cloned()
                    .zip(self.augmentation.iter().map(|c| CoefficientText::Text(c.to_string())))
                    .collect(),
            ),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("presentation serializes")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn augmentation_point(&self) -> &[FieldElement] {
        &self.augmentation
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    pub fn poly(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(text, &self.alphabet, &self.field)
    }

    /// `ε` on a word: the product of the generator values.
    pub fn eval_word(&self, w: &Word) -> FieldElement {
        w.letters()
            .iter()
            .fold(self.field.one(), |acc, &l| &acc * &self.augmentation[l as usize])
    }

    /// `ε` on a polynomial.
    pub fn augmentation_eval(&self, p: &Polynomial) -> FieldElement {
        p.terms().fold(self.field.zero(), |acc, (w, c)| &acc + &(c * &self.eval_word(w)))
    }

    /// True when every generator is sent to zero.
    pub fn has_zero_augmentation(&self) -> bool {
        self.augmentation.iter().all(FieldElement::is_zero)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format_word(w)
    }

    pub fn format_poly(&self, p: &Polynomial) -> String {
        p.format(&self.alphabet, &self.order)
    }
}
