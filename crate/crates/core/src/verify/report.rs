use serde::{Deserialize, Serialize};

/// One checked claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

/// A recorded quantity that is reported but not judged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub label: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub measurements: Vec<Measurement>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases: Vec::new(),
            measurements: Vec::new(),
            overall_pass: true,
        }
    }

    /// Records `measured <= tolerance`. NaN never passes.
    pub fn check(
        &mut self,
        label: impl Into<String>,
        measured: f64,
        tolerance: f64,
        provenance: &str,
    ) -> &mut Case {
        let pass = measured <= tolerance;
        self.push(Case {
            label: label.into(),
            measured,
            tolerance,
            pass,
            provenance: provenance.to_string(),
            message: None,
        })
    }

    /// Records a case that failed for a reason other than a residual.
    pub fn fail(
        &mut self,
        label: impl Into<String>,
        tolerance: f64,
        provenance: &str,
        message: impl Into<String>,
    ) {
        self.push(Case {
            label: label.into(),
            measured: f64::NAN,
            tolerance,
            pass: false,
            provenance: provenance.to_string(),
            message: Some(message.into()),
        });
    }

    pub fn measure(&mut self, label: impl Into<String>, value: f64) {
        self.measurements.push(Measurement {
            label: label.into(),
            value,
        });
    }

    fn push(&mut self, case: Case) -> &mut Case {
        assert!(!case.provenance.is_empty(), "every case needs a provenance");
        self.overall_pass &= case.pass;
        self.cases.push(case);
        self.cases.last_mut().expect("just pushed")
    }

    /// Concatenates reports under a new suite name.
    pub fn merge(suite: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = VerificationReport::new(suite);
        for p in parts {
            for mut c in p.cases {
                c.label = format!("{}: {}", p.suite, c.label);
                out.push(c);
            }
            for mut m in p.measurements {
                m.label = format!("{}: {}", p.suite, m.label);
                out.measurements.push(m);
            }
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
