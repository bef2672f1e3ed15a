//! The report printed by `analyze`.

use std::fmt::Write as _;

use affquandle::affinity::{decide_affine, AffineVerdict};
use affquandle::cover::is_homim_of_affine;
use affquandle::invariants::{cayley_kernel, displacement_group, is_medial, is_tiny, multiplication_group, orbits};
use affquandle::Quandle;

pub struct AnalysisReport {
    pub n: usize,
    pub orbit_sizes: Vec<usize>,
    pub lmlt_order: usize,
    pub dis_order: usize,
    pub kernel_blocks: usize,
    pub medial: bool,
    pub dis_abelian: bool,
    pub dis_semiregular: bool,
    pub tiny: bool,
    pub embeds_into_affine: bool,
    pub homim_of_affine: bool,
    pub affine: AffineVerdict,
}

impl AnalysisReport {
    pub fn compute(q: &Quandle, search_limit: usize) -> Self {
        let dis = displacement_group(q);
        let dis_abelian = dis.is_abelian();
        let dis_semiregular = dis.is_semiregular();
        let tiny = is_tiny(q);
        let homim_of_affine = dis_abelian && tiny;
        assert_eq!(homim_of_affine, is_homim_of_affine(q), "recognition disagrees with the flags");
        AnalysisReport {
            n: q.size(),
            orbit_sizes: orbits(q).sizes(),
            lmlt_order: multiplication_group(q).order(),
            dis_order: dis.order(),
            kernel_blocks: cayley_kernel(q).len(),
            medial: is_medial(q),
            dis_abelian,
            dis_semiregular,
            tiny,
            embeds_into_affine: dis_abelian && dis_semiregular,
            homim_of_affine,
            affine: decide_affine(q, search_limit),
        }
    }

    fn sizes(&self, sep: &str) -> String {
        self.orbit_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(sep)
    }

    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "n={}", self.n).unwrap();
        writeln!(out, "orbits={}", self.orbit_sizes.len()).unwrap();
        writeln!(out, "orbit_sizes={}", self.sizes(",")).unwrap();
        writeln!(out, "lmlt_order={}", self.lmlt_order).unwrap();
        writeln!(out, "dis_order={}", self.dis_order).unwrap();
        writeln!(out, "kernel_blocks={}", self.kernel_blocks).unwrap();
        writeln!(out, "medial={}", yn(self.medial)).unwrap();
        writeln!(out, "dis_abelian={}", yn(self.dis_abelian)).unwrap();
        writeln!(out, "dis_semiregular={}", yn(self.dis_semiregular)).unwrap();
        writeln!(out, "tiny={}", yn(self.tiny)).unwrap();
        writeln!(out, "embeds_into_affine={}", yn(self.embeds_into_affine)).unwrap();
        writeln!(out, "homim_of_affine={}", yn(self.homim_of_affine)).unwrap();
        writeln!(out, "affine={}", self.affine.label()).unwrap();
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "quandle of order {}", self.n).unwrap();
        writeln!(out, "orbits: {} (sizes {})", self.orbit_sizes.len(), self.sizes(" ")).unwrap();
        writeln!(out, "|LMlt| = {}, |Dis| = {}", self.lmlt_order, self.dis_order).unwrap();
        writeln!(out, "Cayley kernel blocks: {}", self.kernel_blocks).unwrap();
        writeln!(out, "medial: {}", yn(self.medial)).unwrap();
        writeln!(out, "Dis abelian: {}", yn(self.dis_abelian)).unwrap();
        writeln!(out, "Dis semiregular: {}", yn(self.dis_semiregular)).unwrap();
        writeln!(out, "Dis tiny: {}", yn(self.tiny)).unwrap();
        writeln!(out, "embeds into an affine quandle: {}", yn(self.embeds_into_affine)).unwrap();
        writeln!(out, "homomorphic image of an affine quandle: {}", yn(self.homim_of_affine)).unwrap();
        match &self.affine {
            AffineVerdict::Affine { group, .. } => {
                let moduli: Vec<String> = group.moduli().iter().map(|m| format!("Z{m}")).collect();
                writeln!(out, "affine: yes, over {}", moduli.join(" x ")).unwrap();
            }
            AffineVerdict::NotAffine(why) => writeln!(out, "affine: no ({why})").unwrap(),
            AffineVerdict::Unknown => writeln!(out, "affine: unknown (order above the search limit)").unwrap(),
        }
        out
    }
}
