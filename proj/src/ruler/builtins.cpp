#include <array>
#include <sstream>

#include "circlekit/ruler.hpp"

namespace circlekit::ruler {

namespace {

// Parallel through `through` to the segment from `k` to `l` whose midpoint
// `mid` is known. With D on line l-through beyond `through`, the cevians DM,
// k-through and l-N of triangle D k l are concurrent (Ceva), and the midpoint
// makes the ratio on k-l equal to one, so through-N is parallel to k-l.
void parallel_by_midpoint(std::ostream& out, const std::string& prefix, const std::string& through,
                          const std::string& k, const std::string& l, const std::string& mid,
                          const std::string& result, const char* indent = "") {
    const std::string p = prefix + "_";
    out << indent << p << "su = join(" << l << ", " << through << ")\n"
        << indent << p << "D = on_line(" << p << "su, \"beyond:" << through << ":" << l << "\")\n"
        << indent << p << "dm = join(" << p << "D, " << mid << ")\n"
        << indent << p << "ku = join(" << k << ", " << through << ")\n"
        << indent << p << "P = meet(" << p << "dm, " << p << "ku)\n"
        << indent << p << "lp = join(" << l << ", " << p << "P)\n"
        << indent << p << "dk = join(" << p << "D, " << k << ")\n"
        << indent << p << "N = meet(" << p << "dk, " << p << "lp)\n"
        << indent << result << " = join(" << through << ", " << p << "N)\n";
}

// Two diameters RS and UV and the parallels through U and V to RS. Any line
// d then meets RS, pU and pV in three points, the middle one being the
// midpoint of the outer two.
void diameters(std::ostream& out, const std::string& center) {
    out << "R = on_circle(\"any\")\n"
        << "rs = join(R, " << center << ")\n"
        << "S = second_meet(rs, R)\n"
        << "U = on_circle(\"arc:R:S\")\n"
        << "uv = join(U, " << center << ")\n"
        << "V = second_meet(uv, U)\n";
    parallel_by_midpoint(out, "pu", "U", "R", "S", center, "pU");
    parallel_by_midpoint(out, "pv", "V", "R", "S", center, "pV");
}

// Parallel through `through` to line e-f, after diameters().
void parallel_to(std::ostream& out, const std::string& prefix, const std::string& through, const std::string& e,
                 const std::string& f, const std::string& result, const char* indent = "") {
    const std::string p = prefix + "_";
    out << indent << p << "d = join(" << e << ", " << f << ")\n"
        << indent << p << "M = meet(rs, " << p << "d)\n"
        << indent << p << "K = meet(pU, " << p << "d)\n"
        << indent << p << "L = meet(pV, " << p << "d)\n";
    parallel_by_midpoint(out, prefix + "_t", through, p + "K", p + "L", p + "M", result, indent);
}

std::string text_parallel_to_diameter() {
    std::ostringstream out;
    out << "# Parallel through M to the diameter AB.\n"
        << "given O : circle_with_center\n"
        << "given A : point\n"
        << "given B : point\n"
        << "given M : point\n";
    parallel_by_midpoint(out, "m", "M", "A", "B", "O", "parallel");
    out << "output parallel : parallel_to_diameter\n";
    return out.str();
}

std::string text_parallel_to_line() {
    std::ostringstream out;
    out << "# Parallel through M to the line EF, using two diameters.\n"
        << "given O : circle_with_center\n"
        << "given E : point\n"
        << "given F : point\n"
        << "given M : point\n";
    diameters(out, "O");
    parallel_to(out, "m", "M", "E", "F", "parallel");
    out << "output parallel : parallel_to_line\n";
    return out.str();
}

std::string text_problem1() {
    std::ostringstream out;
    out << "# Transversal A1B1C1 whose lines through M make equal angles with the sides.\n"
        << "given O : circle_with_center\n"
        << "given A : point\n"
        << "given B : point\n"
        << "given C : point\n"
        << "given M : point\n"
        << "R = on_circle(\"any\")\n"
        << "rs = join(R, O)\n"
        << "S = second_meet(rs, R)\n";
    for (const char* v : {"A", "B", "C"}) {
        const std::string name(v);
        parallel_by_midpoint(out, "p" + name, name, "R", "S", "O", "par" + name);
        out << name << "p = second_meet(par" << name << ", " << name << ")\n";
    }
    out << "bc = join(B, C)\n"
        << "ca = join(C, A)\n"
        << "ab = join(A, B)\n"
        << "ma = join(M, Ap)\n"
        << "mb = join(M, Bp)\n"
        << "mc = join(M, Cp)\n"
        << "A1 = meet(ma, bc)\n"
        << "B1 = meet(mb, ca)\n"
        << "C1 = meet(mc, ab)\n"
        << "transversal = join(A1, B1)\n"
        << "output transversal : equal_angle_transversal\n";
    return out.str();
}

std::string text_problem2() {
    std::ostringstream out;
    out << "# Point M on the circle whose lines to A1, B1, C1 make equal angles with the sides.\n"
        << "given O : circle_with_center\n"
        << "given A : point\n"
        << "given B : point\n"
        << "given C : point\n"
        << "given A1 : point\n"
        << "given B1 : point\n"
        << "transversal = join(A1, B1)\n"
        << "ab = join(A, B)\n"
        << "C1 = meet(transversal, ab)\n";
    diameters(out, "O");
    parallel_to(out, "a", "A", "A1", "B1", "parA");
    out << "Ap = second_meet(parA, A)\n"
        << "apa1 = join(Ap, A1)\n"
        << "M = second_meet(apa1, Ap)\n"
        << "output M : mkensie_point\n";
    return out.str();
}

std::string text_problem3() {
    std::ostringstream out;
    out << "# Isogonal AA1 of the cevian AA'. small_arc: A' on the arc BC avoiding A;\n"
        << "# otherwise A' on the arc AB avoiding C.\n"
        << "given O : circle_with_center\n"
        << "given A : point\n"
        << "given B : point\n"
        << "given C : point\n"
        << "given Ap : point\n"
        << "given small_arc : tag\n";
    diameters(out, "O");
    out << "when small_arc\n";
    parallel_to(out, "s", "Ap", "B", "C", "parAp", "  ");
    out << "  A1 = second_meet(parAp, Ap)\n"
        << "end\n"
        << "unless small_arc\n";
    parallel_to(out, "b", "B", "A", "Ap", "parB", "  ");
    out << "  P = second_meet(parB, B)\n";
    parallel_to(out, "q", "P", "A", "C", "parP", "  ");
    out << "  A1 = second_meet(parP, P)\n"
        << "end\n"
        << "isogonal = join(A, A1)\n"
        << "output isogonal : isogonal_cevian\n";
    return out.str();
}

}  // namespace

std::string_view builtin_name(BuiltinId id) {
    switch (id) {
        case BuiltinId::ParallelToDiameter: return "parallel_to_diameter";
        case BuiltinId::ParallelToLine: return "parallel_to_line";
        case BuiltinId::Problem1: return "problem1";
        case BuiltinId::Problem2: return "problem2";
        case BuiltinId::Problem3: return "problem3";
    }
    return "?";
}

const std::vector<BuiltinId>& all_builtins() {
    static const std::vector<BuiltinId> ids = {BuiltinId::ParallelToDiameter, BuiltinId::ParallelToLine,
                                               BuiltinId::Problem1, BuiltinId::Problem2, BuiltinId::Problem3};
    return ids;
}

std::optional<BuiltinId> parse_builtin(std::string_view name) {
    for (BuiltinId id : all_builtins())
        if (builtin_name(id) == name) return id;
    return std::nullopt;
}

std::string builtin_text(BuiltinId id) {
    switch (id) {
        case BuiltinId::ParallelToDiameter: return text_parallel_to_diameter();
        case BuiltinId::ParallelToLine: return text_parallel_to_line();
        case BuiltinId::Problem1: return text_problem1();
        case BuiltinId::Problem2: return text_problem2();
        case BuiltinId::Problem3: return text_problem3();
    }
    return {};
}

Program builtin(BuiltinId id) { return parse(builtin_text(id)); }

}  // namespace circlekit::ruler
