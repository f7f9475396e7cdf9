#include "vvmf/golden.hpp"

#include <algorithm>
#include <stdexcept>

namespace vvmf {

bool GoldenRow::has_erratum(int comp) const {
    for (const auto& e : erratum)
        if (e.first == comp) return true;
    return false;
}

const std::vector<Int>& GoldenRow::expected(int comp) const {
    for (const auto& e : erratum)
        if (e.first == comp) return e.second;
    return coefficients.at(comp);
}

bool rat_vec_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

using IV = std::vector<Int>;

std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

struct Builder {
    std::vector<GoldenRow> rows;

    GoldenRow& listed(const std::string& fam, const Rat& c, std::vector<Rat> h,
                      const Rat& ell, long dim, const std::string& real,
                      std::vector<std::vector<Int>> coeffs,
                      const std::string& origin) {
        GoldenRow g;
        g.family = fam;
        g.c = c;
        g.h = std::move(h);
        g.ell = ell;
        g.dim_v1 = dim;
        g.realization = real;
        g.coefficients = std::move(coeffs);
        g.kind = GoldenKind::Listed;
        g.origin = origin;
        rows.push_back(std::move(g));
        return rows.back();
    }

    // B_{n,1} presence note: c = n/2 with h = (c/8, 1/2); nothing printed
    // beyond the note itself.
    void omitted(const std::string& fam, int n, const std::string& origin) {
        GoldenRow g;
        g.family = fam;
        g.c = rat(n, 2);
        g.h = {rat(n, 16), rat(1, 2)};
        g.ell = 0;
        g.dim_v1 = -1;
        g.realization = "B_{" + std::to_string(n / 2) + ",1}";
        g.kind = GoldenKind::OmittedB;
        g.origin = origin + "/omitted";
        rows.push_back(std::move(g));
    }

    void sample(const GoldenRow& of) {
        GoldenRow g = of;
        g.kind = GoldenKind::Sample;
        g.origin = "sample";
        rows.push_back(std::move(g));
    }
};

std::vector<GoldenRow> build() {
    Builder b;

    // ---- rank 2, SU(2)_1 fusion rules -------------------------------------
    b.listed("su2_1", 1, {rat(1, 4)}, 0, 3, "SU(2)_1",
             {iv({1, 3, 4}), iv({2, 2, 6})}, "rank2/su2_1");
    b.listed("su2_1", 9, {rat(1, 4)}, 4, 251, "SU(2)_1 x E_{8,1}",
             {iv({1, 251, 4872}), iv({2, 498, 8750})}, "rank2/su2_1");
    b.listed("su2_1", 17, {rat(5, 4)}, 2, 323, "coset (GHM)",
             {iv({1, 323, 60860}), iv({1632, 162656, 4681120})},
             "rank2/su2_1");
    const GoldenRow& su2_33 = b.listed(
        "su2_1", 33, {rat(9, 4)}, 4, 3, "unknown",
        {iv({1, 3, 86004}), iv({565760, 192053760})}, "rank2/su2_1");
    b.sample(su2_33);

    // ---- rank 2, E_{7,1} ---------------------------------------------------
    b.listed("e7_1", 7, {rat(3, 4)}, 0, 133, "E_{7,1}",
             {iv({1, 133, 1673}), iv({56, 968, 7504})}, "rank2/e7_1");
    b.listed("e7_1", 15, {rat(3, 4)}, 4, 381, "E_{7,1} x E_{8,1}",
             {iv({1, 381, 38781}), iv({56, 14856, 478512})}, "rank2/e7_1");
    b.listed("e7_1", 23, {rat(7, 4)}, 2, 69, "coset (GHM)",
             {iv({1, 69, 131905}), iv({32384, 4418944, 189846784})},
             "rank2/e7_1");

    // ---- rank 2, Fibonacci: G_{2,1} and F_{4,1} ----------------------------
    b.listed("g2_1", rat(14, 5), {rat(2, 5)}, 0, 14, "G_{2,1}",
             {iv({1, 14, 42}), iv({7, 34, 119})}, "rank2/g2_1");
    b.listed("g2_1", rat(54, 5), {rat(2, 5)}, 4, 262, "G_{2,1} x E_{8,1}",
             {iv({1, 262, 7638}), iv({7, 1770, 37419})}, "rank2/g2_1");
    b.listed("g2_1", rat(94, 5), {rat(7, 5)}, 2, 188, "coset (GHM)",
             {iv({1, 188, 62087}), iv({4794, 532134, 17518686})},
             "rank2/g2_1");
    b.listed("f4_1", rat(26, 5), {rat(3, 5)}, 0, 52, "F_{4,1}",
             {iv({1, 52, 377}), iv({26, 299, 1702})}, "rank2/f4_1");
    b.listed("f4_1", rat(66, 5), {rat(3, 5)}, 4, 300, "F_{4,1} x E_{8,1}",
             {iv({1, 300, 17397}), iv({26, 6747, 183078})}, "rank2/f4_1");
    b.listed("f4_1", rat(106, 5), {rat(8, 5)}, 2, 106, "coset (GHM)",
             {iv({1, 106, 84429}), iv({15847, 1991846, 76895739})},
             "rank2/f4_1")
        .note = "source prints the prefactor as q^{-33/60}; c = 106/5 fixes "
                "q^{-53/60} (coefficients unaffected)";

    // ---- rank 3, Ising fusion rules ---------------------------------------
    b.listed("ising", rat(1, 2), {rat(1, 16), rat(1, 2)}, 0, 0, "Ising M(4,3)",
             {iv({1, 0, 1}), iv({1, 1, 1}), iv({1, 1, 1})}, "rank3/ising");
    b.listed("ising", rat(17, 2), {rat(17, 16), rat(1, 2)}, 0, 136, "B_{8,1}",
             {iv({1, 136, 2669}), iv({256, 4352, 39168}), iv({17, 697, 8517})},
             "rank3/ising");
    b.listed("ising", rat(33, 2), {rat(33, 16), rat(1, 2)}, 0, 528, "B_{16,1}",
             {iv({1, 528, 42009}), iv({65536, 2162688}),
              iv({33, 5489, 254793})},
             "rank3/ising");
    const GoldenRow& ising_332 = b.listed(
        "ising", rat(33, 2), {rat(17, 16), rat(3, 2)}, 0, 231, "unknown",
        {iv({1, 231, 38940}), iv({528, 70288, 2186448}),
         iv({4301, 247962, 5625708})},
        "rank3/ising");
    b.sample(ising_332);
    b.listed("ising", rat(49, 2), {rat(49, 16), rat(1, 2)}, 0, 1176, "B_{24,1}",
             {iv({1, 1176, 214277}), iv({16777216, 822083584}),
              iv({49, 18473, 1964557})},
             "rank3/ising");
    b.omitted("ising", 65, "rank3/ising");
    b.omitted("ising", 81, "rank3/ising");

    // ---- rank 3, SU(2)_2 ---------------------------------------------------
    b.listed("su2_2", rat(3, 2), {rat(3, 16), rat(1, 2)}, 0, 3, "SU(2)_2",
             {iv({1, 3, 9}), iv({2, 6, 12}), iv({3, 4, 12})}, "rank3/su2_2");
    b.listed("su2_2", rat(19, 2), {rat(19, 16), rat(1, 2)}, 0, 171, "B_{9,1}",
             {iv({1, 171, 4237}), iv({512, 9728, 97280}),
              iv({19, 988, 14896})},
             "rank3/su2_2");
    b.listed("su2_2", rat(35, 2), {rat(35, 16), rat(1, 2)}, 0, 595, "B_{17,1}",
             {iv({1, 595, 53585}), iv({131072, 4587520}),
              iv({35, 6580, 345492})},
             "rank3/su2_2");
    b.listed("su2_2", rat(35, 2), {rat(19, 16), rat(3, 2)}, 0, 210,
             "coset (GHM)",
             {iv({1, 210, 47425}), iv({1120, 143392, 4661440}),
              iv({4655, 329707, 8512950})},
             "rank3/su2_2");
    {
        GoldenRow& g = b.listed(
            "su2_2", rat(51, 2), {rat(51, 16), rat(1, 2)}, 0, 1275, "B_{25,1}",
            {iv({1, 1275, 252501}), iv({417792, 44834816}),
             iv({2975, 1481907})},
            "rank3/su2_2");
        g.erratum = {{1, iv({33554432, 1711276032})}, {2, iv({51, 20876})}};
        g.note =
            "source coefficients for the spinor and vector components are "
            "inconsistent with the printed vacuum row and with the B_{25,1} "
            "free-fermion characters 2^25 (1 + 51q + ...) and q^{1/2} (51 + "
            "20876q + ...); every other B_{n,1} row matches that construction "
            "exactly, so verification uses the free-fermion values here";
    }
    b.omitted("su2_2", 67, "rank3/su2_2");
    b.omitted("su2_2", 83, "rank3/su2_2");

    // ---- rank 3, B_{2,1} ---------------------------------------------------
    b.listed("b2_1", rat(5, 2), {rat(5, 16), rat(1, 2)}, 0, 10, "B_{2,1}",
             {iv({1, 10, 30}), iv({4, 20, 60}), iv({5, 15, 56})},
             "rank3/b2_1");
    b.listed("b2_1", rat(21, 2), {rat(21, 16), rat(1, 2)}, 0, 210, "B_{10,1}",
             {iv({1, 210, 6426}), iv({1024, 21504, 236544}),
              iv({21, 1351, 24780})},
             "rank3/b2_1");
    b.listed("b2_1", rat(37, 2), {rat(21, 16), rat(3, 2)}, 0, 185,
             "coset (GHM)",
             {iv({1, 185, 56351}), iv({2368, 292928, 9914816}),
              iv({4921, 427868, 12578261})},
             "rank3/b2_1");
    b.listed("b2_1", rat(37, 2), {rat(37, 16), rat(1, 2)}, 0, 666, "B_{18,1}",
             {iv({1, 666, 67414}), iv({262144, 9699328, 184287232}),
              iv({37, 7807, 460576})},
             "rank3/b2_1");
    b.omitted("b2_1", 53, "rank3/b2_1");
    b.omitted("b2_1", 69, "rank3/b2_1");
    b.omitted("b2_1", 85, "rank3/b2_1");

    // ---- rank 3, B_{3,1} ---------------------------------------------------
    b.listed("b3_1", rat(7, 2), {rat(7, 16), rat(1, 2)}, 0, 21, "B_{3,1}",
             {iv({1, 21, 84}), iv({8, 56, 224}), iv({7, 42, 175})},
             "rank3/b3_1");
    b.listed("b3_1", rat(23, 2), {rat(23, 16), rat(1, 2)}, 0, 253, "B_{11,1}",
             {iv({1, 253, 9384}), iv({2048, 47104, 565248}),
              iv({23, 1794, 39491})},
             "rank3/b3_1");
    b.listed("b3_1", rat(39, 2), {rat(39, 16), rat(1, 2)}, 0, 741, "B_{19,1}",
             {iv({1, 741, 83772}), iv({524288, 20447232, 408944640}),
              iv({39, 9178, 604695})},
             "rank3/b3_1")
        .note = "source prints the spinor prefactor as q^{23/16}; the h_1 "
                "column fixes q^{39/16} (coefficients unaffected)";
    b.listed("b3_1", rat(39, 2), {rat(23, 16), rat(3, 2)}, 0, 156,
             "coset (GHM)",
             {iv({1, 156, 65442}), iv({4992, 599168, 21046272}),
              iv({5083, 542685, 18172323})},
             "rank3/b3_1");
    b.omitted("b3_1", 55, "rank3/b3_1");
    b.omitted("b3_1", 71, "rank3/b3_1");
    b.omitted("b3_1", 87, "rank3/b3_1");

    // ---- rank 3, B_{4,1} ---------------------------------------------------
    b.listed("b4_1", rat(9, 2), {rat(9, 16), rat(1, 2)}, 0, 36, "B_{4,1}",
             {iv({1, 36, 207}), iv({16, 144, 720}), iv({9, 93, 459})},
             "rank3/b4_1");
    b.listed("b4_1", rat(25, 2), {rat(25, 16), rat(1, 2)}, 0, 300, "B_{12,1}",
             {iv({1, 300, 13275}), iv({4096, 102400, 1331200}),
              iv({25, 2325, 60655})},
             "rank3/b4_1")
        .note = "source prints the prefactor as q^{-9/48}; c = 25/2 fixes "
                "q^{-25/48} (coefficients unaffected)";
    b.listed("b4_1", rat(25, 2), {rat(9, 16), rat(3, 2)}, 0, 275, "unknown",
             {iv({1, 275, 13250}), iv({25, 4121, 102425}),
              iv({2325, 60630, 811950})},
             "rank3/b4_1");
    b.listed("b4_1", rat(41, 2), {rat(41, 16), rat(1, 2)}, 0, 820, "B_{20,1}",
             {iv({1, 820, 102951}), iv({1048576, 42991616}),
              iv({41, 10701, 783059})},
             "rank3/b4_1");
    b.listed("b4_1", rat(41, 2), {rat(25, 16), rat(3, 2)}, 0, 123,
             "coset (GHM)",
             {iv({1, 123, 74374}), iv({10496, 1227008, 44597504}),
              iv({5125, 673630, 25702490})},
             "rank3/b4_1");
    b.omitted("b4_1", 57, "rank3/b4_1");
    b.omitted("b4_1", 73, "rank3/b4_1");
    b.omitted("b4_1", 89, "rank3/b4_1");

    // ---- rank 3, B_{5,1} ---------------------------------------------------
    b.listed("b5_1", rat(11, 2), {rat(11, 16), rat(1, 2)}, 0, 55, "B_{5,1}",
             {iv({1, 55, 451}), iv({32, 352, 2112}), iv({11, 176, 1078})},
             "rank3/b5_1");
    b.listed("b5_1", rat(27, 2), {rat(27, 16), rat(1, 2)}, 0, 351, "B_{13,1}",
             {iv({1, 351, 18279}), iv({8192, 221184, 3096576}),
              iv({27, 2952, 90234})},
             "rank3/b5_1");
    b.listed("b5_1", rat(27, 2), {rat(11, 16), rat(3, 2)}, 0, 270, "unknown",
             {iv({1, 270, 18171}), iv({54, 8354, 221508}),
              iv({2871, 89991, 1380456})},
             "rank3/b5_1");
    b.listed("b5_1", rat(43, 2), {rat(43, 16), rat(1, 2)}, 0, 903, "B_{21,1}",
             {iv({1, 903, 125259}), iv({2097152, 90177536}),
              iv({43, 12384, 1001470})},
             "rank3/b5_1");
    b.listed("b5_1", rat(43, 2), {rat(27, 16), rat(3, 2)}, 0, 86,
             "coset (GHM)",
             {iv({1, 86, 82775}), iv({22016, 2515456, 94360576}),
              iv({5031, 819279, 35627220})},
             "rank3/b5_1");
    b.omitted("b5_1", 59, "rank3/b5_1");
    b.omitted("b5_1", 75, "rank3/b5_1");
    b.omitted("b5_1", 91, "rank3/b5_1");

    // ---- rank 3, B_{6,1} ---------------------------------------------------
    b.listed("b6_1", rat(13, 2), {rat(13, 16), rat(1, 2)}, 0, 78, "B_{6,1}",
             {iv({1, 78, 884}), iv({64, 832, 5824}), iv({13, 299, 2314})},
             "rank3/b6_1");
    b.listed("b6_1", rat(29, 2), {rat(29, 16), rat(1, 2)}, 0, 406, "B_{14,1}",
             {iv({1, 406, 24592}), iv({16384, 475136, 7127040}),
              iv({29, 3683, 130558})},
             "rank3/b6_1");
    {
        GoldenRow& g = b.listed(
            "b6_1", rat(29, 2), {rat(13, 16), rat(3, 2)}, 0, 261, "unknown",
            {iv({1, 261, 24157}), iv({116, 16964, 476876}),
             iv({3393, 129688, 2279671})},
            "rank3/b6_1");
        g.erratum = {{2, iv({3393, 129688, 2270671})}};
        g.note =
            "the printed q^2 coefficient 2279671 of the h=3/2 component is "
            "inconsistent with the rest of the row: the expansion is forced "
            "by the connection matrix through the modular recurrence, all 17 "
            "other printed coefficients match that solution bit-exactly, and "
            "substituting the printed value breaks S-covariance at tau=2i by "
            "O(1) whereas 2270671 is covariant to working precision; read as "
            "a one-digit misprint";
    }
    b.listed("b6_1", rat(45, 2), {rat(45, 16), rat(1, 2)}, 0, 990, "B_{22,1}",
             {iv({1, 990, 151020}), iv({4194304, 188743680}),
              iv({45, 14235, 1266354})},
             "rank3/b6_1");
    b.listed("b6_1", rat(45, 2), {rat(29, 16), rat(3, 2)}, 0, 45,
             "coset (GHM)",
             {iv({1, 45, 90225}), iv({46080, 5161984}),
              iv({4785, 977184, 48445515})},
             "rank3/b6_1");
    b.omitted("b6_1", 61, "rank3/b6_1");
    b.omitted("b6_1", 77, "rank3/b6_1");
    b.omitted("b6_1", 93, "rank3/b6_1");

    // ---- rank 3, B_{7,1} ---------------------------------------------------
    b.listed("b7_1", rat(15, 2), {rat(15, 16), rat(1, 2)}, 0, 105, "B_{7,1}",
             {iv({1, 105, 1590}), iv({128, 1920, 15360}), iv({15, 470, 4593})},
             "rank3/b7_1");
    b.listed("b7_1", rat(31, 2), {rat(31, 16), rat(1, 2)}, 0, 465, "B_{15,1}",
             {iv({1, 465, 32426}), iv({32768, 1015808, 16252928}),
              iv({31, 4526, 184357})},
             "rank3/b7_1");
    b.listed("b7_1", rat(31, 2), {rat(15, 16), rat(3, 2)}, 0, 248, "E_{8,2}",
             {iv({1, 248, 31124}), iv({248, 34504, 1022752}),
              iv({3875, 181753, 3623869})},
             "rank3/b7_1");
    b.listed("b7_1", rat(47, 2), {rat(47, 16), rat(1, 2)}, 0, 1081, "B_{23,1}",
             {iv({1, 1081, 180574}), iv({8388608, 394264576}),
              iv({47, 16262, 1584793})},
             "rank3/b7_1");
    b.listed("b7_1", rat(47, 2), {rat(31, 16), rat(3, 2)}, 0, 0,
             "baby monster VB(0)^nat",
             {iv({1, 0, 96256}), iv({96256, 10602496}),
              iv({4371, 1143745, 64680601})},
             "rank3/b7_1");
    b.omitted("b7_1", 63, "rank3/b7_1");
    b.omitted("b7_1", 79, "rank3/b7_1");
    b.omitted("b7_1", 95, "rank3/b7_1");

    // ---- rank 3, (1/2) SU(2)_5 ---------------------------------------------
    const GoldenRow& half_487 = b.listed(
        "half_su2_5", rat(48, 7), {rat(1, 7), rat(5, 7)}, 3, 78, "unknown",
        {iv({1, 78, 784}), iv({1, 133, 1618}), iv({55, 890, 6720})},
        "rank3/half_su2_5");
    b.sample(half_487);
    b.listed("half_su2_5", rat(104, 7), {rat(8, 7), rat(5, 7)}, 3, 188,
             "unknown",
             {iv({1, 188, 17260}), iv({725, 52316, 1197468}),
              iv({44, 13002, 424040})},
             "rank3/half_su2_5");
    b.listed("half_su2_5", rat(160, 7), {rat(8, 7), rat(12, 7)}, 3, 40,
             "unknown",
             {iv({1, 40, 60440}), iv({285, 227848, 17128120}),
              iv({27170, 3857360})},
             "rank3/half_su2_5");
    b.listed("half_su2_5", rat(216, 7), {rat(15, 7), rat(12, 7)}, 3, 3,
             "unknown",
             {iv({1, 3, 52254}), iv({260623, 74348634}),
              iv({11495, 10341870})},
             "rank3/half_su2_5");

    // ---- rank 3, conjugate (1/2) SU(2)_5 -----------------------------------
    b.listed("half_su2_5_bar", rat(64, 7), {rat(6, 7), rat(2, 7)}, 3, 136,
             "simple current extension of SU(2)_5 x E_{7,1}",
             {iv({1, 136, 2417}), iv({117, 2952, 32220}),
              iv({3, 632, 10787})},
             "rank3/half_su2_5_bar");
    b.listed("half_su2_5_bar", rat(120, 7), {rat(6, 7), rat(9, 7)}, 3, 156,
             "unknown",
             {iv({1, 156, 28926}), iv({78, 28692, 1194804}),
              iv({2108, 200787, 5744052})},
             "rank3/half_su2_5_bar");
    b.listed("half_su2_5_bar", rat(176, 7), {rat(13, 7), rat(9, 7)}, 3, 14,
             "unknown",
             {iv({1, 14, 66512}), iv({50922, 8656740}),
              iv({782, 718267, 64206178})},
             "rank3/half_su2_5_bar");

    // ---- rank 3, SU(3)_1 (folded) ------------------------------------------
    b.listed("su3_1", 2, {rat(1, 3), rat(1, 3)}, 0, 8, "SU(3)_1",
             {iv({1, 8, 17}), iv({6, 18, 54}), iv({6, 18, 54})},
             "rank3/su3_1");
    b.listed("su3_1", 10, {rat(1, 3), rat(1, 3)}, 4, 256, "SU(3)_1 x E_{8,1}",
             {iv({1, 256, 6125}), iv({6, 1506, 29262}), iv({6, 1506, 29262})},
             "rank3/su3_1");
    b.listed("su3_1", 18, {rat(4, 3), rat(4, 3)}, 2, 234, "coset (GHM)",
             {iv({1, 234, 59805}), iv({4374, 463644, 14403582}),
              iv({4374, 463644, 14403582})},
             "rank3/su3_1");
    const GoldenRow& su3_34 = b.listed(
        "su3_1", 34, {rat(7, 3), rat(7, 3)}, 4, 1, "unknown",
        {iv({1, 1, 58997}), iv({1535274, 528134256}),
         iv({1535274, 528134256})},
        "rank3/su3_1");
    b.sample(su3_34);

    // ---- rank 3, E_{6,1} (folded) ------------------------------------------
    b.listed("e6_1", 6, {rat(2, 3), rat(2, 3)}, 0, 78, "E_{6,1}",
             {iv({1, 78, 729}), iv({54, 756, 4968}), iv({54, 756, 4968})},
             "rank3/e6_1");
    b.listed("e6_1", 14, {rat(2, 3), rat(2, 3)}, 4, 326, "E_{6,1} x E_{8,1}",
             {iv({1, 326, 24197}), iv({54, 14148, 415152}),
              iv({54, 14148, 415152})},
             "rank3/e6_1");
    b.listed("e6_1", 22, {rat(5, 3), rat(5, 3)}, 2, 88, "coset (GHM)",
             {iv({1, 88, 99935}), iv({32076, 4185918, 169667460}),
              iv({32076, 4185918, 169667460})},
             "rank3/e6_1");

    return b.rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = build();
    return rows;
}

const GoldenRow* golden_lookup(const std::string& family, const Rat& c,
                               const std::vector<Rat>& h) {
    for (const GoldenRow& g : golden_rows()) {
        if (g.kind == GoldenKind::Sample) continue;
        if (g.family == family && g.c == c && g.h == h) return &g;
    }
    return nullptr;
}

}  // namespace vvmf
