use std::fmt::Write as _;

use super::Word;
use crate::{Error, Result};

/// Per-level minimum distance; `None` when no codeword pair differs at that
/// level (a level of size one).
pub type LevelDistance = Option<u32>;

/// A UEP codebook: every message tuple `(a₁, …, a_m)` with `a_i < A_i`
/// mapped to a length-`n` word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UepCode {
    n: u32,
    shape: Vec<usize>,
    /// Indexed by the mixed-radix rank of the tuple, level 1 most significant.
    words: Vec<Word>,
    profile: Vec<LevelDistance>,
}

impl UepCode {
    /// Builds a code and computes its distance profile.
    pub fn new(n: u32, shape: Vec<usize>, words: Vec<Word>) -> Result<Self> {
        let mut code = Self::with_profile(n, shape, words, Vec::new())?;
        code.profile = verify_profile(&code);
        Ok(code)
    }

    /// Builds a code carrying a claimed (unverified) profile.
    pub fn with_profile(
        n: u32,
        shape: Vec<usize>,
        words: Vec<Word>,
        profile: Vec<LevelDistance>,
    ) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(Error::InvalidParams(format!("bad shape {shape:?}")));
        }
        let total = shape
            .iter()
            .try_fold(1usize, |acc, &a| acc.checked_mul(a))
            .ok_or_else(|| Error::InvalidParams("codebook size overflows".into()))?;
        if words.len() != total {
            return Err(Error::InvalidParams(format!(
                "shape {shape:?} needs {total} codewords, got {}",
                words.len()
            )));
        }
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::InvalidParams(format!(
                "codeword {w} is not of length {n}"
            )));
        }
        if !profile.is_empty() && profile.len() != shape.len() {
            return Err(Error::InvalidParams(
                "profile and shape lengths differ".into(),
            ));
        }
        Ok(Self {
            n,
            shape,
            words,
            profile,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn profile(&self) -> &[LevelDistance] {
        &self.profile
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Message tuple at mixed-radix rank `index`.
    pub fn message(&self, mut index: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.shape.len()];
        for (slot, &a) in tuple.iter_mut().zip(&self.shape).rev() {
            *slot = index % a;
            index /= a;
        }
        tuple
    }

    pub fn rank(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.shape.len() {
            return None;
        }
        tuple
            .iter()
            .zip(&self.shape)
            .try_fold(0usize, |acc, (&x, &a)| (x < a).then_some(acc * a + x))
    }

    pub fn codeword(&self, tuple: &[usize]) -> Option<&Word> {
        self.rank(tuple).map(|i| &self.words[i])
    }

    /// `true` when every level reaches the requested distance.
    pub fn meets(&self, required: &[u32]) -> bool {
        meets(&verify_profile(self), required)
    }
}

pub(crate) fn meets(profile: &[LevelDistance], required: &[u32]) -> bool {
    profile.len() == required.len()
        && profile
            .iter()
            .zip(required)
            .all(|(got, &want)| got.is_none_or(|d| d >= want))
}

/// Exact distance profile: for each level, the minimum Hamming distance over
/// codeword pairs whose messages differ at that level.
pub fn verify_profile(code: &UepCode) -> Vec<LevelDistance> {
    let m = code.shape.len();
    let tuples: Vec<Vec<usize>> = (0..code.words.len()).map(|i| code.message(i)).collect();
    let mut best: Vec<LevelDistance> = vec![None; m];
    for i in 0..code.words.len() {
        for j in i + 1..code.words.len() {
            let d = code.words[i].distance(&code.words[j]);
            for level in 0..m {
                if tuples[i][level] != tuples[j][level] {
                    let slot = &mut best[level];
                    *slot = Some(slot.map_or(d, |b| b.min(d)));
                }
            }
        }
    }
    best
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn profile_entry(d: &LevelDistance) -> String {
    d.map_or_else(|| "inf".to_string(), |d| d.to_string())
}

/// Text codebook:
///
/// ```text
/// uep v1 n=<n> shape=<A1,...,Am> profile=<d1,...,dm>
/// <a1,...,am>\t<n-character 0/1 string>
/// ```
///
/// one line per message tuple in lexicographic order. Unbounded profile
/// entries are written `inf`.
pub fn write_codebook(code: &UepCode) -> String {
    let mut out = format!(
        "uep v1 n={} shape={} profile={}\n",
        code.n,
        join(&code.shape),
        join(code.profile.iter().map(profile_entry)),
    );
    for (i, w) in code.words.iter().enumerate() {
        writeln!(out, "{}\t{}", join(code.message(i)), w).expect("write to String");
    }
    out
}

fn parse_list<T>(
    line: usize,
    field: &str,
    text: &str,
    f: impl Fn(&str) -> Option<T>,
) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| {
            f(s).ok_or_else(|| Error::Parse {
                line,
                msg: format!("bad {field} entry {s:?}"),
            })
        })
        .collect()
}

/// Parses [`write_codebook`] output. The header profile is kept as claimed;
/// use [`verify_profile`] to check it.
pub fn read_codebook(text: &str) -> Result<UepCode> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty codebook".into(),
    })?;
    let fields: Vec<&str> = header.split(' ').collect();
    let bad_header = |msg: &str| Error::Parse {
        line: 1,
        msg: msg.to_string(),
    };
    if fields.len() != 5 || fields[0] != "uep" || fields[1] != "v1" {
        return Err(bad_header(
            "header must be `uep v1 n=.. shape=.. profile=..`",
        ));
    }
    let value = |field: &str, key: &str| -> Result<String> {
        field
            .strip_prefix(key)
            .map(str::to_string)
            .ok_or_else(|| bad_header(&format!("expected `{key}...`, found {field:?}")))
    };
    let n: u32 = value(fields[2], "n=")?
        .parse()
        .map_err(|_| bad_header("n is not an integer"))?;
    let shape = parse_list(1, "shape", &value(fields[3], "shape=")?, |s| {
        s.parse::<usize>().ok().filter(|&a| a > 0)
    })?;
    let profile = parse_list(1, "profile", &value(fields[4], "profile=")?, |s| {
        if s == "inf" {
            Some(None)
        } else {
            s.parse::<u32>().ok().map(Some)
        }
    })?;
    if profile.len() != shape.len() {
        return Err(bad_header("profile and shape lengths differ"));
    }
    let total: usize = shape.iter().product();
    let mut slots: Vec<Option<Word>> = vec![None; total];
    let probe = UepCode {
        n,
        shape: shape.clone(),
        words: Vec::new(),
        profile: Vec::new(),
    };
    for (line, text) in lines {
        if text.is_empty() {
            continue;
        }
        let (tuple, bits) = text.split_once('\t').ok_or_else(|| Error::Parse {
            line,
            msg: "expected `<tuple>\\t<bits>`".into(),
        })?;
        let tuple = parse_list(line, "message", tuple, |s| s.parse::<usize>().ok())?;
        let rank = probe.rank(&tuple).ok_or_else(|| Error::Parse {
            line,
            msg: format!("message {tuple:?} does not fit shape {shape:?}"),
        })?;
        let word: Word = bits.parse().map_err(|e: Error| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        if word.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("codeword has length {}, expected {n}", word.len()),
            });
        }
        if slots[rank].replace(word).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("message {tuple:?} listed twice"),
            });
        }
    }
    let words = slots
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("message {:?} missing", probe.message(i)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    UepCode::with_profile(n, shape, words, profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent oracle: explicit double loop over message tuples.
    fn oracle(code: &UepCode) -> Vec<LevelDistance> {
        let shape = code.shape().to_vec();
        let mut tuples = vec![vec![]];
        for &a in &shape {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    (0..a).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        (0..shape.len())
            .map(|level| {
                let mut best = None;
                for s in &tuples {
                    for t in &tuples {
                        if s[level] != t[level] {
                            let d = code
                                .codeword(s)
                                .unwrap()
                                .distance(code.codeword(t).unwrap());
                            best = Some(best.map_or(d, |b: u32| b.min(d)));
                        }
                    }
                }
                best
            })
            .collect()
    }

    #[test]
    fn repetition_pair() {
        let code = UepCode::new(3, vec![2], vec![w("000"), w("111")]).unwrap();
        assert_eq!(code.profile(), &[Some(3)]);
    }

    #[test]
    fn two_by_two() {
        let code = UepCode::new(
            4,
            vec![2, 2],
            vec![w("0000"), w("0011"), w("1111"), w("1100")],
        )
        .unwrap();
        assert_eq!(code.codeword(&[1, 1]), Some(&w("1100")));
        assert_eq!(code.profile(), &[Some(2), Some(2)]);
        assert_eq!(oracle(&code), vec![Some(2), Some(2)]);
        assert!(code.meets(&[2, 2]));
        assert!(!code.meets(&[3, 2]));
    }

    #[test]
    fn duplicates_give_zero() {
        let code =
            UepCode::new(3, vec![2, 2], vec![w("000"), w("011"), w("000"), w("110")]).unwrap();
        assert_eq!(code.profile()[0], Some(0));
        assert!(!code.meets(&[1, 1]));
    }

    #[test]
    fn single_message_level_is_unbounded() {
        let code = UepCode::new(3, vec![1, 2], vec![w("000"), w("011")]).unwrap();
        assert_eq!(code.profile(), &[None, Some(2)]);
        assert!(code.meets(&[7, 2]));
    }

    #[test]
    fn ranks() {
        let code = UepCode::new(2, vec![2, 3], (0..6).map(|_| w("00")).collect()).unwrap();
        for i in 0..6 {
            assert_eq!(code.rank(&code.message(i)), Some(i));
        }
        assert_eq!(code.message(4), vec![1, 1]);
        assert_eq!(code.rank(&[2, 0]), None);
    }

    #[test]
    fn codebook_text() {
        let code = UepCode::new(
            4,
            vec![2, 2],
            vec![w("0000"), w("0011"), w("1111"), w("1100")],
        )
        .unwrap();
        let text = write_codebook(&code);
        assert_eq!(
            text,
            "uep v1 n=4 shape=2,2 profile=2,2\n0,0\t0000\n0,1\t0011\n1,0\t1111\n1,1\t1100\n"
        );
        let back = read_codebook(&text).unwrap();
        assert_eq!(back, code);
        assert_eq!(write_codebook(&back), text);

        let one = UepCode::new(3, vec![1, 2], vec![w("000"), w("011")]).unwrap();
        let text = write_codebook(&one);
        assert!(text.starts_with("uep v1 n=3 shape=1,2 profile=inf,2\n"));
        assert_eq!(read_codebook(&text).unwrap(), one);
    }

    #[test]
    fn codebook_errors() {
        assert!(read_codebook("").is_err());
        assert!(read_codebook("uep v2 n=3 shape=2 profile=3\n0\t000\n1\t111\n").is_err());
        assert!(read_codebook("uep v1 n=3 shape=2 profile=3\n0\t000\n").is_err());
        assert!(read_codebook("uep v1 n=3 shape=2 profile=3\n0\t000\n0\t111\n").is_err());
        assert!(read_codebook("uep v1 n=3 shape=2 profile=3\n0\t000\n1\t11\n").is_err());
        assert!(read_codebook("uep v1 n=3 shape=2 profile=3\n0\t000\n2\t111\n").is_err());
        assert!(read_codebook("uep v1 n=3 shape=2 profile=3\n0 000\n1\t111\n").is_err());
        let ok = read_codebook("uep v1 n=3 shape=2 profile=3\n1\t111\n0\t000\n").unwrap();
        assert_eq!(ok.words()[0], w("000"));
    }
}
