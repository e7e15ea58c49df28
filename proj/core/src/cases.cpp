#include "tsallis/cases.hpp"

#include <array>
#include <sstream>
#include <string>

namespace tsallis {
namespace {

constexpr CaseSchema kPairOnly{};
constexpr CaseSchema kV{.v = true};
constexpr CaseSchema kWindow{.window = true};
constexpr CaseSchema kWindowV{.window = true, .v = true};
constexpr CaseSchema kVST{.v = true, .s = true, .t = true};
constexpr CaseSchema kVS{.v = true, .s = true};
constexpr CaseSchema kVMap{.v = true, .map = true};
constexpr CaseSchema kVMuMap{.v = true, .mu = true, .map = true};
constexpr CaseSchema kVSTMap{.v = true, .s = true, .t = true, .map = true};
constexpr CaseSchema kSTMap{.s = true, .t = true, .map = true};
constexpr CaseSchema kRatio{.v = true, .c = true, .k_window = true};

using Id = InequalityId;

constexpr std::array kRegistry{
    InequalityInfo{Id::kKnownBoundsS, "KNOWN_BOUNDS_S",
                   "A - AB^-1A <= S(A|B) <= B - A", kPairOnly},
    InequalityInfo{Id::kKnownBoundsT, "KNOWN_BOUNDS_T",
                   "A - AB^-1A <= T_v(A|B) <= B - A", kV},
    InequalityInfo{Id::kChordT, "CHORD_T",
                   "ln_v chord over [m,M] <= T_v(A|B) when mA <= B <= MA",
                   kWindowV},
    InequalityInfo{Id::kChordS, "CHORD_S",
                   "ln chord over [m,M] <= S(A|B) when mA <= B <= MA", kWindow},
    InequalityInfo{Id::kXiPsiSandwich, "XI_PSI_SANDWICH",
                   "0 <= A#ln xi(X) <= S(A|B) - chord <= A#ln psi(X)", kWindow},
    InequalityInfo{Id::kDragomirSandwich, "DRAGOMIR_SANDWICH",
                   "0 <= K(M/m)(A/2 - |.|/(M-m)) <= S(A|B) - chord <= "
                   "K(M/m)(A/2 + |.|/(M-m))",
                   kWindow},
    InequalityInfo{Id::kTangentBounds, "TANGENT_BOUNDS",
                   "(ln_v t)A + A nat_v B - t A nat_{v-1} B <= T_v(A|B) <= "
                   "(ln_v s)A + s^{v-1}(B - sA)",
                   kVST},
    InequalityInfo{Id::kFuruichi36, "FURUICHI_36",
                   "A #_v B - s A nat_{v-1} B + (ln_v s)A <= T_v(A|B) <= "
                   "sB - A - (ln_v s) A #_v B, s = 1/alpha",
                   kVS},
    InequalityInfo{Id::kMono13, "MONO_13",
                   "Phi(T_v(A|B)) <= T_v(Phi(A)|Phi(B))", kVMap},
    InequalityInfo{Id::kMonoRefined, "MONO_REFINED",
                   "Phi(T_v(A|B)) <= integral over mu in [0,1] <= "
                   "T_v(Phi(A)|Phi(B))",
                   kVMap},
    InequalityInfo{Id::kAndoSandwich, "ANDO_SANDWICH",
                   "Phi(G) <= Phi(G #_mu A) #_v Phi(G #_mu B) <= "
                   "Phi(A) #_v Phi(B), G = A #_v B",
                   kVMuMap},
    InequalityInfo{Id::kComplementary, "COMPLEMENTARY",
                   "T_v(Phi(A)|Phi(B)) <= Phi(T_v(A|B)) + (ln_v s - ln_v t)Phi(A) "
                   "+ Phi(t A nat_{v-1} B - A #_v B) + s^{v-1} Phi(B - sA)",
                   kVSTMap},
    InequalityInfo{Id::kComplementaryLimit, "COMPLEMENTARY_LIMIT",
                   "S(Phi(A)|Phi(B)) <= Phi(S(A|B)) + (ln(s/t) - 2)Phi(A) + "
                   "t Phi(AB^-1A) + s^-1 Phi(B)",
                   kSTMap},
    InequalityInfo{Id::kExpvOperator, "EXPV_OPERATOR",
                   "exp_v Hermite-Hadamard bounds on E_v(A|B), ordered by sign "
                   "of v",
                   kV},
    InequalityInfo{Id::kFourChainPos, "FOUR_CHAIN_POS",
                   "S <= T_v <= E_v <= E for 0 < v <= 1", kV},
    InequalityInfo{Id::kFourChainNeg, "FOUR_CHAIN_NEG",
                   "E <= E_v <= T_v <= S for -1 <= v < 0", kV},
    InequalityInfo{Id::kRatioK, "RATIO_K",
                   "E_v(A|B) <= K(m,M,v) E_v(A|C) for B <= C, Sp(I+vX) in [m,M]",
                   kRatio},

    InequalityInfo{Id::kComplementaryLimitPrinted, "COMPLEMENTARY_LIMIT_PRINTED",
                   "S(Phi(A)|Phi(B)) <= Phi(S(A|B)) + (ln(s/t) - 2)Phi(A) + "
                   "Phi(t AB^-1A - s^-1 B)",
                   kSTMap},
    InequalityInfo{Id::kXiPsiReweighted, "XI_PSI_REWEIGHTED",
                   "xi/psi sandwich with Young weight (M-t)/(M-m)", kWindow},
    InequalityInfo{Id::kDragomirLogK, "DRAGOMIR_LOGK",
                   "Dragomir sandwich with factor ln K(M/m)", kWindow},
    InequalityInfo{Id::kRatioKReciprocal, "RATIO_K_RECIPROCAL",
                   "E_v(A|B) <= K(m,M,1/v) E_v(A|C)", kRatio},
};

void require_field(bool wanted, bool present, std::string_view id,
                   std::string_view field) {
  if (wanted == present) return;
  std::ostringstream os;
  os << id << ": parameter '" << field
     << "' " << (wanted ? "is required" : "is not part of this schema");
  throw PreconditionError(os.str());
}

}  // namespace

std::span<const InequalityInfo> all_inequalities() { return kRegistry; }

const InequalityInfo& info(InequalityId id) {
  for (const auto& entry : kRegistry)
    if (entry.id == id) return entry;
  throw std::invalid_argument("unregistered inequality id");
}

std::string_view to_string(InequalityId id) { return info(id).name; }

InequalityId inequality_from_string(std::string_view name) {
  for (const auto& entry : kRegistry)
    if (entry.name == name) return entry.id;
  throw std::invalid_argument("unknown inequality id: " + std::string(name));
}

void validate_schema(const InequalityCase& c) {
  const InequalityInfo& i = info(c.id);
  const CaseSchema& s = i.schema;
  require_field(s.window, c.pair.window().has_value(), i.name, "window");
  require_field(s.v, c.v.has_value(), i.name, "v");
  require_field(s.s, c.s.has_value(), i.name, "s");
  require_field(s.t, c.t.has_value(), i.name, "t");
  require_field(s.mu, c.mu.has_value(), i.name, "mu");
  require_field(s.map, c.map.has_value(), i.name, "map");
  require_field(s.c, c.c.has_value(), i.name, "C");
  require_field(s.k_window, c.k_window.has_value(), i.name, "k_window");
  if (!(c.tol > 0.0)) throw PreconditionError("case tolerance must be > 0");
  if (c.quad_nodes < 2) throw PreconditionError("quad_nodes must be >= 2");
}

}  // namespace tsallis
