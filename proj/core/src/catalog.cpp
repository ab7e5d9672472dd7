#include "ineqcert/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ineqcert/certify.hpp"
#include "ineqcert/errors.hpp"

namespace ineqcert {

std::string_view to_string(Expected e) {
  switch (e) {
    case Expected::kProvable: return "provable";
    case Expected::kProvableOnTruncation: return "provable-on-truncation";
    case Expected::kSuspectedTypo: return "suspected-typo";
  }
  return "?";
}

std::string_view to_string(Section s) {
  switch (s) {
    case Section::kSec1: return "sec1";
    case Section::kSec2: return "sec2";
    case Section::kSec3: return "sec3";
  }
  return "?";
}

std::optional<Section> section_from_name(std::string_view s) {
  for (Section v : {Section::kSec1, Section::kSec2, Section::kSec3}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Direction d) { return d == Direction::kIncreasing ? "increasing" : "decreasing"; }

namespace {

Interval constant_enclosure(const std::string& text, const ConstantTable& table) {
  const Expr e = parse_expr(text, table);
  if (e.depends_on_x()) throw DomainError("'" + text + "' is not constant");
  return eval_interval(e, Interval(0.0));
}

struct ConstantSpec {
  const char* id;
  const char* symbol;
  const char* definition;
  double reference;
  const char* location;
  const char* quote;
  const char* notes = "";
};

// Constants with closed-form definitions, in dependency order.
const ConstantSpec kClosedForm[] = {
    {"const_alpha", "alpha", "pi/(pi-2)", 2.75194, "Theorem 1.1", "\\alpha=\\pi/(\\pi-2)\\approx 2.75194"},
    {"const_beta", "beta", "3", 3.0, "Theorem 1.1", "$\\beta=3$"},
    {"const_k", "k", "(pi/2)^alpha", 3.46505, "Section 3, lemma on f_alpha", "$k=(\\pi/2)^\\alpha \\approx 3.46505$"},
    {"const_alpha1", "alpha1", "log(pi)/log(3)", 1.04198, "Section 3, theorem with alpha_1 and alpha_2",
     "\\alpha_1=\\log(\\pi)/\\log (3)\\approx 1.04198"},
    {"const_alpha2", "alpha2", "log(6/pi)/log(2)", 0.93345, "Section 3, theorem with alpha_1 and alpha_2", "\\alpha_2=\\log(\\pi/6)/\\log (2)",
     "the statement prints log(pi/6), which is negative; the proof derives 6/pi = 2^alpha2, so log(6/pi)/log 2 is "
     "used. Its value 0.933466 differs from the printed 0.93345 by 1.7e-5"},
    {"const_beta1", "beta1", "1", 1.0, "Section 3, theorem with alpha_1 and alpha_2", "$\\beta_1=1$ and $\\beta_2=1$"},
    {"const_beta2", "beta2", "1", 1.0, "Section 3, theorem with alpha_1 and alpha_2", "$\\beta_1=1$ and $\\beta_2=1$"},
    {"const_thm2702_alpha", "alpha2702", "(pi^2+8*log(2/pi)-2*pi)/8", -0.00328, "Theorem 1.10",
     "\\alpha=(\\pi^2+8\\log(2/\\pi)-2\\pi)/8\\approx -0.00328"},
};

struct IneqSpec {
  const char* id;
  Section section;
  const char* dsl;
  const char* location;
  const char* quote;
  Expected expected = Expected::kProvable;
  const char* trunc_lo = nullptr;
  const char* trunc_hi = nullptr;
  double delta = 0;
  const char* notes = "";
};

constexpr const char* kLaztri = "(\\cos x)^{1/3}<\\frac{\\sin x}{x}<\\frac{\\cos x+2}{3}";
constexpr const char* kLazhyp = "(\\cosh x)^{1/3}<\\frac{\\sinh x}{x}<\\frac{\\cosh x+2}{3}";
constexpr const char* kThm1 =
    "\\frac{\\cos x+\\alpha-1}{\\alpha} \\leq \\frac{\\sin x}{x} \\leq \\frac{\\cos x+\\beta-1}{\\beta}";
constexpr const char* kThm2 = "3\\cos x \\le \\frac{x}{\\sin x}+2\\frac{x}{\\tan x} \\le 2+\\cos x.";
constexpr const char* kThm2702 =
    "\\exp \\left( \\alpha-\\frac{(\\pi-2)x^2}{2\\pi} \\right) <\\frac{(\\pi-2)\\cos(x)+2}{\\pi}<\\exp \\left( "
    "\\beta-\\frac{(\\pi-2)x^2}{2\\pi} \\right)";
constexpr const char* kIneq0515 =
    "\\frac{\\sinh x}{x}<\\frac{\\cosh x+2}{3}<(\\cosh x)^{1/3}\\frac{\\cosh (2x/3)+1}{2},\\quad x>0.";
constexpr const char* kJozs = "\\frac{\\pi}{2}   + \\cos x<  \\frac{x}{\\sin x} +2\\frac{x}{\\tan x} <  2 + \\cos x,";
constexpr const char* kKober =
    "3\\exp \\left( -\\frac{x^2}{6} \\right) -2<\\cos x<\\frac{\\pi\\exp(-(\\pi-2)x^2/(2\\pi))-2}{\\pi-2}.";
constexpr const char* kTanTrunc = "pi/2 - 2^-8";

const IneqSpec kInequalities[] = {
    {"adamovic_lower", Section::kSec1, "cos(x) <= sinc(x)^3 on [-pi/2, pi/2] sharp at {0}", "Eq. (1.1)", kLaztri,
     Expected::kProvable, nullptr, nullptr, 0, "cube of (cos x)^(1/3) < sin(x)/x; the real power is undefined at cos x = 0"},
    {"cusa_upper", Section::kSec1, "sinc(x) <= (cos(x)+2)/3 on [-pi/2, pi/2] sharp at {0}", "Eq. (1.1)", kLaztri},
    {"lazarevic_lower", Section::kSec1, "cosh(x)^(1/3) <= sinhc(x) on [-inf, inf] sharp at {0}", "Eq. (1.2)", kLazhyp,
     Expected::kProvableOnTruncation, "0", "20"},
    {"hyp_cusa_upper", Section::kSec1, "sinhc(x) <= (cosh(x)+2)/3 on [-inf, inf] sharp at {0}", "Eq. (1.2)", kLazhyp,
     Expected::kProvableOnTruncation, "0", "20"},
    {"wilker", Section::kSec1, "sinc(x)^2 + sinc(x)/cos(x) >= 2 on [-pi/2, pi/2] sharp at {0}", "Eq. (1.3)",
     "\\left(\\frac{\\sin x}{x}\\right)^2+\\frac{\\tan x}{x}>2,\\quad 0<|x|<\\frac{\\pi}{2}.",
     Expected::kProvableOnTruncation, "0", kTanTrunc, 0, "tan(x)/x written as sinc(x)/cos(x)"},
    {"huygens", Section::kSec1, "2*sinc(x) + sinc(x)/cos(x) >= 3 on [-pi/2, pi/2] sharp at {0}", "Eq. (1.4)",
     "2\\frac{\\sin x}{x}+\\frac{\\tan x}{x}>3,\\quad 0<|x|<\\frac{\\pi}{2}", Expected::kProvableOnTruncation, "0",
     kTanTrunc, 0, "tan(x)/x written as sinc(x)/cos(x)"},
    {"wu_srivastava", Section::kSec1, "inv_sinc2(x) + xcot(x) >= 2 on [-pi/2, pi/2] sharp at {0}", "Eq. (1.5)",
     "\\left(\\frac{x}{\\sin x}\\right)^2+\\frac{x}{\\tan x}>2,\\quad 0<|x|<\\frac{\\pi}{2}."},
    {"thm1_lower", Section::kSec1, "(cos(x) + alpha - 1)/alpha <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
     "Theorem 1.1", kThm1},
    {"thm1_upper", Section::kSec1, "sinc(x) <= (cos(x) + 3 - 1)/3 on [-pi/2, pi/2] sharp at {0}", "Theorem 1.1",
     "$\\beta=3$"},
    {"thm1_upper_real", Section::kSec1, "sinc(x) <= (cos(x) + 3 - 1)/3 on [-inf, inf] sharp at {0}", "Remark 1.2",
     "The right hand side inequality holds true for all real numbers $x$", Expected::kProvableOnTruncation, "0",
     "4*pi", 0, "the claim for all real x is certified on the truncation only"},
    {"thm0", Section::kSec1,
     "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x) <= pi^2/4 on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}", "Theorem 1.3",
     "\\left(\\frac{x}{\\sin x}\\right)^2+\\left(\\frac{\\pi^2}{4}-1\\right)\\frac{x}{\\tan x} \\leq "
     "\\frac{\\pi^2}{4}"},
    {"newineq1", Section::kSec1, "(alpha - 1)/sinc(x) + xcot(x) <= alpha on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}",
     "Theorem 1.5", "(\\alpha-1)\\frac{x}{\\sin x}+\\frac{x}{\\tan x} \\leq \\alpha,"},
    {"newineq2", Section::kSec1, "(1/sinc(x))^alpha + xcot(x) <= (pi/2)^alpha on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
     "Theorem 1.5",
     "\\left(\\frac{x}{\\sin x}\\right)^\\alpha+\\frac{x}{\\tan x} < \\left(\\frac{\\pi}{2}\\right)^\\alpha,"},
    {"newineq1_converse", Section::kSec3, "(alpha - 1)/sinc(x) + xcot(x) >= fx1 on [-pi/2, pi/2] sharp at {-x1, x1}",
     "Section 3, remark after the second proof of Theorem 1.5", "f(x_1)\\approx 2.7219", Expected::kProvable, nullptr, nullptr, 0,
     "fx1 is the value at the computed root x1"},
    {"thm2_lower", Section::kSec1, "3*cos(x) <= 1/sinc(x) + 2*xcot(x) on [-pi/2, pi/2] sharp at {0}", "Theorem 1.7",
     kThm2, Expected::kProvable, nullptr, nullptr, 0, "the displayed proof covers only the upper bound"},
    {"thm2_upper", Section::kSec1, "1/sinc(x) + 2*xcot(x) <= 2 + cos(x) on [-pi/2, pi/2] sharp at {0}", "Theorem 1.7",
     kThm2},
    {"thm4_chain_left", Section::kSec1,
     "inv_sinhc2(x) + xcoth(x) <= sinhc(x)^2 + sinhc(x)/cosh(x) on [0, inf] sharp at {0}", "Theorem 1.9",
     "\\left(\\frac{x}{\\sinh x}\\right)^2+\\frac{x}{\\tanh x}<\\left(\\frac{\\sinh x}{x}\\right)^2+",
     Expected::kProvableOnTruncation, "0", "20", 0, "tanh(x)/x written as sinhc(x)/cosh(x)"},
    {"thm4_chain_right", Section::kSec1,
     "sinhc(x)^2 + sinhc(x)/cosh(x) <= (1 + cosh(2*x/3))/2*(inv_sinhc2(x) + xcoth(x)) on [0, inf] sharp at {0}",
     "Theorem 1.9", "\\frac{\\tanh x}{x}<\\frac{1+\\cosh (2x/3)}{2}\\left(", Expected::kSuspectedTypo, "0", "1.75", 0,
     "fails for x beyond about 1.79997 (e.g. x = 2); certified on [0, 1.75] only"},
    {"yang", Section::kSec1, "exp(-x^2/6) <= (2+cos(x))/3 on [0, inf] sharp at {0}", "Eq. (1.7)",
     "\\exp(-x^2/6)<\\frac{2+\\cos x}{3},\\quad", Expected::kProvableOnTruncation, "0", "20", 0.05,
     "sixth order contact at 0 needs a wider exclusion"},
    {"thm2702_lower", Section::kSec1,
     "exp(alpha2702 - (pi-2)*x^2/(2*pi)) <= ((pi-2)*cos(x)+2)/pi on [0, pi/2] sharp at {pi/2}", "Theorem 1.10",
     kThm2702},
    {"thm2702_upper", Section::kSec1, "((pi-2)*cos(x)+2)/pi <= exp(-(pi-2)*x^2/(2*pi)) on [0, pi/2] sharp at {0}",
     "Theorem 1.10", kThm2702},
    {"lem2b_tanh", Section::kSec2, "sinhc(x)/cosh(x) <= 2/(sqrt(9+4*x^2) - 1) on [-inf, inf] sharp at {0}",
     "Lemma 2.4", "\\frac{\\tanh x}{x} \\le \\frac{2}{\\sqrt{9+4x^2}-1},\\quad x \\in \\mathbb{R},",
     Expected::kProvableOnTruncation, "0", "20"},
    {"lem2b_hyp_left", Section::kSec2, "sinhc(x) <= (cosh(x)+2)/3 on [0, inf] sharp at {0}", "Eq. (2.9)", kIneq0515,
     Expected::kProvableOnTruncation, "0", "20"},
    {"lem2b_hyp_right", Section::kSec2,
     "(cosh(x)+2)/3 <= cosh(x)^(1/3)*(cosh(2*x/3)+1)/2 on [0, inf] sharp at {0}", "Eq. (2.9)", kIneq0515,
     Expected::kProvableOnTruncation, "0", "20"},
    {"sinxnew_left", Section::kSec3,
     "4/pi^2*(1/sinc(x) + (pi^2/4 - 1)*cos(x)) <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, 0, pi/2}", "Eq. (3.1)",
     "\\frac{4}{\\pi^2}\\left(\\frac{x}{\\sin x}+\\left(\\frac{\\pi^2}{4}-1\\right)\\cos x\\right)<\\frac{\\sin "
     "x}{x}"},
    {"sinxnew_right", Section::kSec3, "sinc(x) <= (1/sinc(x) + cos(x))/2 on [-pi/2, pi/2] sharp at {0}", "Eq. (3.1)",
     "<\\frac{1}{2}\\left(\\frac{x}{\\sin x}+\\cos x\\right)."},
    {"jozs_lower", Section::kSec3, "pi/2 + cos(x) <= 1/sinc(x) + 2*xcot(x) on [0, pi/2] sharp at {pi/2}",
     "Corollary 3.3", kJozs},
    {"jozs_upper", Section::kSec3, "1/sinc(x) + 2*xcot(x) <= 2 + cos(x) on [0, pi/2] sharp at {0}", "Corollary 3.3",
     kJozs},
    {"hyp_wu_srivastava", Section::kSec3, "inv_sinhc2(x) + xcoth(x) >= 2 on [0, inf] sharp at {0}", "Section 3, corollary after Corollary 3.3",
     "\\left(\\frac{ x}{\\sinh x}\\right)^2+\\frac{ x}{\\tanh x}>0,", Expected::kSuspectedTypo, "0", "20", 0,
     "the paper displays > 0 and the identity (x/sinh x)^2 - x^2 = x/sinh x, which are inconsistent; the intended "
     "hyperbolic Wu-Srivastava form > 2 is certified, the literal form is kept as hyp_wu_srivastava_literal"},
    {"hyp_wu_srivastava_literal", Section::kSec3, "inv_sinhc2(x) + xcoth(x) > 0 on [0, inf]", "Section 3, corollary after Corollary 3.3",
     "\\left(\\frac{ x}{\\sinh x}\\right)^2+\\frac{ x}{\\tanh x}>0,", Expected::kProvableOnTruncation, "0", "20", 0,
     "literal form as printed"},
    {"thm2201_1_lower", Section::kSec3, "(cos(x)+2)/3^alpha1 <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
     "Section 3, theorem with alpha_1 and alpha_2",
     "\\displaystyle\\frac{\\cos x+2}{3^{\\alpha_1}}<\\frac{\\sin x}{x}<\\frac{\\cos x+2}{3^{\\beta_1}},"},
    {"thm2201_1_upper", Section::kSec3, "sinc(x) <= (cos(x)+2)/3^beta1 on [-pi/2, pi/2] sharp at {0}", "Section 3, theorem with alpha_1 and alpha_2",
     "\\displaystyle\\frac{\\cos x+2}{3^{\\alpha_1}}<\\frac{\\sin x}{x}<\\frac{\\cos x+2}{3^{\\beta_1}},"},
    {"thm2201_2_lower", Section::kSec3, "(cos(x) + 2^alpha2)/3 <= sinc(x) on [-pi/2, pi/2] sharp at {-pi/2, pi/2}",
     "Section 3, theorem with alpha_1 and alpha_2",
     "\\displaystyle\\frac{\\cos x+2^{\\alpha_2}}{3}<\\frac{\\sin x}{x}<\\frac{\\cos x+2^{\\beta_2}}{3}.",
     Expected::kProvable, nullptr, nullptr, 0, "alpha2 taken as log(6/pi)/log 2"},
    {"thm2201_2_upper", Section::kSec3, "sinc(x) <= (cos(x) + 2^beta2)/3 on [-pi/2, pi/2] sharp at {0}",
     "Section 3, theorem with alpha_1 and alpha_2",
     "\\displaystyle\\frac{\\cos x+2^{\\alpha_2}}{3}<\\frac{\\sin x}{x}<\\frac{\\cos x+2^{\\beta_2}}{3}."},
    {"kober_lower", Section::kSec3, "3*exp(-x^2/6) - 2 <= cos(x) on [0, pi/2] sharp at {0}", "Section 3, final corollary (Kober type)", kKober,
     Expected::kProvable, nullptr, nullptr, 0.05, "sixth order contact at 0 needs a wider exclusion"},
    {"kober_upper", Section::kSec3, "cos(x) <= (pi*exp(-(pi-2)*x^2/(2*pi)) - 2)/(pi-2) on [0, pi/2] sharp at {0}",
     "Section 3, final corollary (Kober type)", kKober},
    {"proof_aux_cos43", Section::kSec3, "cos(x/2)^(4/3) <= sinc(x) on [-pi/2, pi/2] sharp at {0}", "Proof of Theorem 1.7",
     "(\\cos(x/2))^{4/3}<\\frac{\\sin x}{x}<\\frac{2+\\cos x}{3}"},
};

struct MonotoneSpec {
  const char* id;
  const char* function;
  const char* lo;
  const char* hi;
  Direction direction;
  const char* left_limit;
  const char* right_limit;
  double delta_end;
  const char* location;
  const char* quote;
  const char* notes = "";
};

const MonotoneSpec kMonotone[] = {
    {"mono_f1", "(inv_sinc2(x) - xcot(x))/(1 - xcot(x))", "0", "pi/2", Direction::kIncreasing, "2", "pi^2/4", 1e-2,
     "Lemma 2.3", "is strictly increasing from $(0,\\pi/2)$ onto $(\\pi^2/4)$",
     "the stated range is read as (2, pi^2/4), the limits computed in the proof; near 0 the derivative is a 0/0 "
     "quotient and is only certified from delta_end on"},
    {"mono_f6", "(cos(x) - 1)/(sinc(x) - 1)", "0", "pi/2", Direction::kDecreasing, "3", "pi/(pi-2)", 1e-2,
     "Proof of Theorem 1.1", "Hence $f_6$ is decreasing by Lemma \\ref{lembk}.",
     "near 0 the derivative is a 0/0 quotient and is only certified from delta_end on"},
    {"mono_falpha", "(alpha/(alpha+x-1))^alpha + alpha*x/(alpha+x-1)", "0", "1", Direction::kDecreasing, "k", "2",
     1e-6, "Section 3, lemma on f_alpha", "is decreasing from $(0,1)$ onto $(2,k)$"},
    {"mono_f10", "(2+cos(x))/sinc(x)", "0", "pi/2", Direction::kIncreasing, "3", "pi", 1e-6, "Section 3, proof of the theorem with alpha_1 and alpha_2",
     "proving that $f_{10}(x)$ is strictly increasing"},
    {"mono_f13", "3*sinc(x) - cos(x)", "0", "pi/2", Direction::kDecreasing, "2", "6/pi", 1e-6, "Section 3, proof of the theorem with alpha_1 and alpha_2",
     "proving that  $f_{13}(x)$ is strictly decreasing"},
    {"mono_thm2702", "log(((pi-2)*cos(x)+2)/pi) + (pi-2)*x^2/(2*pi)", "0", "pi/2", Direction::kDecreasing, "0",
     "alpha2702", 1e-6, "Proof of Theorem 1.10", "Thus, the $f$ function is strictly decreasing"},
    {"mono_jozs", "1/sinc(x) + 2*xcot(x) - cos(x)", "0", "pi/2", Direction::kDecreasing, "2", "pi/2", 1e-6,
     "Proof of Corollary 3.3", "Thus $f(x)$ is strictly decreasing"},
};

struct GapSpec {
  const char* id;
  const char* f;
  const char* bound;
  const char* lo;
  const char* hi;
  GapKind kind;
  double paper_lower;
  double paper_upper;
  const char* location;
  const char* quote;
};

constexpr const char* kThm2Function = "1/sinc(x) + 2*xcot(x)";

const GapSpec kGaps[] = {
    {"gap_thm1_lower", "sinc(x)", "(cos(x) + alpha - 1)/alpha", "0", "pi/2", GapKind::kBelow, 0, 0.01, "Remark 1.2",
     "the difference between the function and the lower bound is less than 0.01"},
    {"gap_thm1_upper", "sinc(x)", "(cos(x) + 2)/3", "0", "pi/2", GapKind::kBelow, 0, 0.031, "Remark 1.2",
     "the difference between the function and the upper bound less than 0.031"},
    {"gap_thm0", "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x)", "pi^2/4", "0", "pi/2", GapKind::kBelow, 0, 0.13,
     "Remark 1.4", "the difference between the function and the upper bound is less that 0.13"},
    {"gap_newineq1", "(alpha - 1)/sinc(x) + xcot(x)", "alpha", "0", "pi/2", GapKind::kBelow, 0, 0.031, "Remark 1.6",
     "the difference between the function $\\alpha$ and the lower bound is less than 0.031"},
    {"gap_newineq2", "(1/sinc(x))^alpha + xcot(x)", "(pi/2)^alpha", "0", "pi/2", GapKind::kBetween, 1.45, 1.9,
     "Remark 1.6", "the difference between the function and the lower bound is between 1.45 and 1.9"},
    {"gap_lem2b_tanh", "sinhc(x)/cosh(x)", "2/(sqrt(9+4*x^2) - 1)", "0", "20", GapKind::kBelow, 0, 0.02,
     "Remark 2.5", "the difference between the function and the upper bound is less than 0.02"},
    {"gap_thm2_lower", kThm2Function, "3*cos(x)", "0", "pi/2", GapKind::kBelow, 0, 1.6, "Section 3, remark after the proof of Theorem 1.7",
     "The difference between the function and the lower bound is less than 1.6"},
    {"gap_thm2_upper", kThm2Function, "2 + cos(x)", "0", "pi/2", GapKind::kBelow, 0, 0.55, "Section 3, remark after the proof of Theorem 1.7",
     "between the function and the upper bound is less than 0.55"},
    {"gap_thm2_lower_x2", kThm2Function, "3*cos(x)", "0", "pi/2", GapKind::kBelowXSquared, 0, 0, "Section 3, remark after the proof of Theorem 1.7",
     "In both cases the difference is less than $x^2$."},
    {"gap_thm2_upper_x2", kThm2Function, "2 + cos(x)", "0", "pi/2", GapKind::kBelowXSquared, 0, 0, "Section 3, remark after the proof of Theorem 1.7",
     "In both cases the difference is less than $x^2$."},
};

constexpr const char* kX0Function = "(alpha - 1)/2 - sinc(x)";
constexpr const char* kX1Function = "(alpha-1)*(sin(x) - x*cos(x)) + sin(x)*cos(x) - x";
constexpr const char* kNewineq1Function = "(alpha - 1)/sinc(x) + xcot(x)";

struct ValueSpec {
  const char* id;
  const char* expr;
  const char* point;
  const char* expected;
  double tolerance;
  const char* location;
  const char* quote;
};

const ValueSpec kValues[] = {
    {"value_fx1", kNewineq1Function, "x1", "2.7219", 5e-4, "Section 3, remark after the second proof of Theorem 1.5", "f(x_1)\\approx 2.7219"},
    {"value_thm0_sharp", "inv_sinc2(x) + (pi^2/4 - 1)*xcot(x)", "pi/2", "pi^2/4", 1e-9, "Theorem 1.3",
     "the equality is attained at values $x=-\\pi/2$, $x=0$ and $x=\\pi/2$"},
    {"value_newineq2_sharp", "(1/sinc(x))^alpha + xcot(x)", "pi/2", "(pi/2)^alpha", 1e-9, "Theorem 1.5",
     "the inequality \\eqref{newineq2} is sharp for $x \\in \\{ -\\pi/2,\\pi/2 \\}$"},
    {"value_thm1_lower_sharp", "(cos(x) + alpha - 1)/alpha", "pi/2", "2/pi", 1e-9, "Theorem 1.1",
     "The lower bound is sharp for $x \\in \\{ -\\pi/2 , 0 ,\\pi/2 \\}$"},
    {"value_thm1_upper_sharp", "(cos(x) + 3 - 1)/3", "0", "1", 1e-12, "Theorem 1.1",
     "the upper bound is sharp for $x=0$"},
    {"value_newineq1_sharp", kNewineq1Function, "pi/2", "alpha", 1e-9, "Theorem 1.5",
     "The inequality \\eqref{newineq1} is sharp for $x \\in \\{ -\\pi/2,0,\\pi/2 \\}$"},
};

Citation cite(const char* location, const char* quote) { return Citation{location, quote}; }

Truncation make_truncation(const char* lo, const char* hi, const ConstantTable& table) {
  Truncation t{lo, hi, constant_enclosure(lo, table), constant_enclosure(hi, table)};
  if (!(t.lo.hi() < t.hi.lo())) throw DomainError(std::string("empty truncation [") + lo + ", " + hi + "]");
  return t;
}

bool valid_id(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Catalog load_builtin() {
  Catalog c;
  c.symbols_ = ConstantTable::with_builtins();
  for (const auto& s : kClosedForm) {
    ConstantRecord r;
    r.id = s.id;
    r.symbol = s.symbol;
    r.definition = s.definition;
    r.decimal_reference = s.reference;
    r.citation = cite(s.location, s.quote);
    r.notes = s.notes;
    const Expr e = parse_expr(s.definition, c.symbols_);
    r.enclosure = eval_interval(e, Interval(0.0));
    r.value = eval_point(e, 0);
    c.symbols_.add(r.symbol, r.enclosure, r.value);
    c.constants_.push_back(std::move(r));
  }

  // Roots of the alternative proof of the first inequality of Theorem 1.5.
  const struct {
    const char* id;
    const char* symbol;
    const char* function;
    double lo, hi, paper;
    const char* quote;
  } roots[] = {
      {"root_x0", "x0", kX0Function, 0.5, 1.2, 0.8795, "exactly one root  $x_0\\approx 0.8795$"},
      {"root_x1", "x1", kX1Function, 1.0, 1.4, 1.1559, "where $x_1\\approx 1.1559$"},
  };
  for (const auto& s : roots) {
    RootRecord rr;
    rr.id = s.id;
    rr.expr_text = s.function;
    rr.expr = parse_expr(s.function, c.symbols_);
    rr.bracket = Interval(s.lo, s.hi);
    rr.paper_value = s.paper;
    rr.tolerance = 5e-4;
    rr.citation = cite("Proof of Theorem 1.5", s.quote);
    const RootResult root = find_root(rr.expr, rr.bracket);
    ConstantRecord cr;
    cr.id = std::string("const_") + s.symbol;
    cr.symbol = s.symbol;
    cr.definition = std::string("root of ") + s.function + " in [" + shortest_decimal(s.lo) + ", " +
                    shortest_decimal(s.hi) + "]";
    cr.decimal_reference = s.paper;
    cr.tolerance = rr.tolerance;
    cr.citation = rr.citation;
    cr.enclosure = root.enclosure;
    cr.value = root.estimate;
    c.symbols_.add(cr.symbol, cr.enclosure, cr.value);
    c.constants_.push_back(std::move(cr));
    c.roots_.push_back(std::move(rr));
  }
  {
    const Expr f = parse_expr(kNewineq1Function, c.symbols_);
    const ConstantValue* x1 = c.symbols_.find("x1");
    ConstantRecord cr;
    cr.id = "const_fx1";
    cr.symbol = "fx1";
    cr.definition = std::string(kNewineq1Function) + " at x1";
    cr.decimal_reference = 2.7219;
    cr.tolerance = 5e-4;
    cr.citation = cite("Section 3, remark after the second proof of Theorem 1.5", "f(x_1)\\approx 2.7219");
    cr.enclosure = eval_interval(f, x1->enclosure);
    cr.value = eval_point(f, x1->value);
    c.symbols_.add(cr.symbol, cr.enclosure, cr.value);
    c.constants_.push_back(std::move(cr));
  }

  for (const auto& s : kInequalities) {
    InequalityRecord r;
    r.id = s.id;
    r.dsl = s.dsl;
    r.stmt = parse_inequality(s.dsl, c.symbols_);
    r.citation = cite(s.location, s.quote);
    r.expected = s.expected;
    if (s.trunc_lo) r.truncation = make_truncation(s.trunc_lo, s.trunc_hi, c.symbols_);
    r.section = s.section;
    r.notes = s.notes;
    if (s.delta > 0) r.delta = s.delta;
    c.inequalities_.push_back(std::move(r));
  }

  for (const auto& s : kMonotone) {
    MonotoneRecord r;
    r.id = s.id;
    r.function_text = s.function;
    r.function = parse_expr(s.function, c.symbols_);
    r.lo_text = s.lo;
    r.hi_text = s.hi;
    r.lo = constant_enclosure(s.lo, c.symbols_);
    r.hi = constant_enclosure(s.hi, c.symbols_);
    r.direction = s.direction;
    r.left_limit_text = s.left_limit;
    r.right_limit_text = s.right_limit;
    r.left_limit = constant_enclosure(s.left_limit, c.symbols_);
    r.right_limit = constant_enclosure(s.right_limit, c.symbols_);
    r.delta_end = s.delta_end;
    r.citation = cite(s.location, s.quote);
    r.notes = s.notes;
    c.monotone_.push_back(std::move(r));
  }

  for (const auto& s : kGaps) {
    GapClaim g;
    g.id = s.id;
    g.f_text = s.f;
    g.bound_text = s.bound;
    g.f = parse_expr(s.f, c.symbols_);
    g.bound = parse_expr(s.bound, c.symbols_);
    g.lo_text = s.lo;
    g.hi_text = s.hi;
    g.lo = constant_enclosure(s.lo, c.symbols_);
    g.hi = constant_enclosure(s.hi, c.symbols_);
    g.kind = s.kind;
    g.paper_lower = s.paper_lower;
    g.paper_upper = s.paper_upper;
    g.citation = cite(s.location, s.quote);
    c.gaps_.push_back(std::move(g));
  }

  for (const auto& s : kValues) {
    ValueRecord v;
    v.id = s.id;
    v.expr_text = s.expr;
    v.expr = parse_expr(s.expr, c.symbols_);
    v.point_text = s.point;
    v.point = constant_enclosure(s.point, c.symbols_);
    v.expected_text = s.expected;
    v.expected = constant_enclosure(s.expected, c.symbols_);
    v.tolerance = s.tolerance;
    v.citation = cite(s.location, s.quote);
    c.values_.push_back(std::move(v));
  }
  return c;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = load_builtin();
  return catalog;
}

const ConstantTable& catalog_constants() { return builtin_catalog().symbols(); }

const InequalityRecord& Catalog::get(std::string_view id) const {
  for (const auto& r : inequalities_) {
    if (r.id == id) return r;
  }
  throw NotFoundError("no inequality record '" + std::string(id) + "'");
}

const MonotoneRecord& Catalog::get_monotone(std::string_view id) const {
  for (const auto& r : monotone_) {
    if (r.id == id) return r;
  }
  throw NotFoundError("no monotone record '" + std::string(id) + "'");
}

const ConstantRecord& Catalog::get_constant(std::string_view id) const {
  for (const auto& r : constants_) {
    if (r.id == id || r.symbol == id) return r;
  }
  throw NotFoundError("no constant '" + std::string(id) + "'");
}

bool Catalog::contains(std::string_view id) const {
  const auto same = [&](const auto& r) { return r.id == id; };
  return std::any_of(inequalities_.begin(), inequalities_.end(), same) ||
         std::any_of(monotone_.begin(), monotone_.end(), same);
}

std::vector<std::string> Catalog::list(std::optional<Section> filter) const {
  std::vector<std::string> out;
  for (const auto& r : inequalities_) {
    if (!filter || r.section == *filter) out.push_back(r.id);
  }
  return out;
}

Interval Catalog::resolve_constant(std::string_view id) const { return get_constant(id).enclosure; }

void Catalog::add_statements(std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    InequalityRecord r;
    r.id = "user_" + std::to_string(line_no);
    const auto colon = body.find(':');
    if (colon != std::string::npos) {
      const std::string id = trim(body.substr(0, colon));
      if (!valid_id(id)) throw FormatError(where + ": invalid record id '" + id + "'");
      r.id = id;
      body = trim(body.substr(colon + 1));
    }
    if (contains(r.id)) throw FormatError(where + ": duplicate record id '" + r.id + "'");
    try {
      r.stmt = parse_inequality(body, symbols_);
    } catch (const Error& err) {
      throw FormatError(where + ": " + err.what());
    }
    r.dsl = body;
    r.citation = Citation{where, body};
    r.expected = r.stmt.bounded() ? Expected::kProvable : Expected::kProvableOnTruncation;
    r.section = Section::kSec1;
    r.user_supplied = true;
    inequalities_.push_back(std::move(r));
  }
}

void Catalog::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  add_statements(ss.str(), path);
}

}  // namespace ineqcert
