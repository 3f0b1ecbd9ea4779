#include "atlas/tables.hpp"

namespace atlas {

const std::vector<Label>& alpha_labels()
{
    static const std::vector<Label> a = {
        {0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {1, 0, 1, 1}, {0, 2, 0, 0},
        {2, 2, 0, 0}, {0, 2, 2, 0}, {0, 2, 0, 2}, {2, 0, 2, 2}, {2, 2, 2, 2},
    };
    return a;
}

const std::vector<std::vector<Label>>& gamma_beta_labels()
{
    static const std::vector<std::vector<Label>> g = {
        {{1, 1, 1, 1}},
        {{2, 2, 0, 0}, {0, 0, 2, 2}},
        {{2, 0, 2, 0}, {0, 2, 0, 2}},
        {{2, 0, 0, 2}, {0, 2, 2, 0}},
        {{3, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 1, 3}, {1, 1, 3, 1}},
        {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 0, 4}, {0, 0, 4, 0}, {2, 2, 2, 2}},
        {{2, 2, 4, 4}, {4, 4, 2, 2}},
        {{2, 4, 2, 4}, {4, 2, 4, 2}},
        {{2, 4, 4, 2}, {4, 2, 2, 4}},
        {{0, 4, 4, 4}, {4, 0, 4, 4}, {4, 4, 4, 0}, {4, 4, 0, 4}},
        {{8, 4, 4, 4}, {4, 8, 4, 4}, {4, 4, 4, 8}, {4, 4, 8, 4}},
    };
    return g;
}

int alpha_index(const Label& a)
{
    const auto& al = alpha_labels();
    for (size_t i = 0; i < al.size(); ++i)
        if (al[i] == a)
            return static_cast<int>(i) + 1;
    return 0;
}

int gamma_index(int alpha, const Label& g)
{
    if (alpha < 1 || alpha > 11)
        return 0;
    const auto& gl = gamma_beta_labels()[alpha - 1];
    for (size_t i = 0; i < gl.size(); ++i)
        if (gl[i] == g)
            return static_cast<int>(i) + 1;
    return 0;
}

const std::vector<TableIRow>& table1()
{
    // clang-format off
    static const std::vector<TableIRow> t = {
        {1, 5, 1, 1, 1, "(++--)", {"++--"}, {1}, 0, ""},
        {2, 6, 2, 2, 1, "(++--) ± (---)", {"++--", "----"}, {1, 2}, 0,
         "(---) -> (----); printed gamma(2;1) is gamma(2;2) for this support"},
        {3, 6, 3, 1, 1, "(++--) ± (+--)", {"++--", "+--+"}, {1, 2}, 0, "(+--) -> (+--+)"},
        {4, 6, 4, 1, 1, "(++--) ± (+-+)", {"++--", "+-+-"}, {1, 2}, 0, "(+-+) -> (+-+-)"},
        {5, 6, 4, 2, 2, "(++-+) ± (-+--)", {"++-+", "-+--"}, {1, 2}, 0, ""},
        {6, 6, 3, 2, 2, "(+++-) ± (-+--)", {"+++-", "-+--"}, {1, 2}, 0, ""},
        {7, 6, 2, 1, 1, "(+++-) ± (++-)", {"+++-", "++-+"}, {1, 2}, 0, "(++-) -> (++-+)"},
        {8, 8, 5, 4, 4, "(++-+) ± (-+--) ± (+---)", {"++-+", "-+--", "+---"}, {1, 2, 3, 4}, 0, ""},
        {9, 8, 5, 3, 3, "(+++-) ± (-+--) ± (+---)", {"+++-", "-+--", "+---"}, {1, 2, 3, 4}, 0, ""},
        {10, 8, 5, 1, 1, "(+++-) ± (++-) ± (+---)", {"+++-", "++-+", "+---"}, {1, 2, 3, 4}, 0, "(++-) -> (++-+)"},
        {11, 8, 5, 2, 2, "(+++-) ± (++-) ± (-+--)", {"+++-", "++-+", "-+--"}, {1, 2, 3, 4}, 0, "(++-) -> (++-+)"},
        {12, 9, 6, 4, 4, "(-+-+) ± (++--) ± (+--) ± (---)", {"-+-+", "++--", "+--+", "----"}, {5, 3, 1, 4, 2}, 0,
         "(+--) -> (+--+), (---) -> (----); 8 repairs match the labels, 1 covers beta(6;1..5)"},
        {13, 9, 6, 3, 3, "(-++-) ± (++--) ± (+--) ± (---)", {"-++-", "++--", "+-+-", "----"}, {5, 4, 1, 3, 2}, 0,
         "(+--) -> (+-+-), (---) -> (----); 8 repairs match the labels, 1 covers beta(6;1..5)"},
        {14, 9, 6, 1, 1, "(++++) ± (++--) ± (+--) ± (+--)", {"++++", "++--", "+-+-", "+--+"}, {5, 3, 4, 1, 2}, 0,
         "(+--) -> (+-+-), (+--) -> (+--+); 6 repairs match the labels, 2 cover beta(6;1..5); first taken"},
        {15, 9, 6, 2, 2, "(-+++) ± (++-) ± (++-) ± (-+-)", {"-+++", "+++-", "++-+", "-+--"}, {5, 1, 3, 4, 2}, 0,
         "(++-) -> (+++-), (++-) -> (++-+), (-+-) -> (-+--); 24 repairs match the labels, 2 cover beta(6;1..5); first taken"},
        {16, 9, 6, 5, 5, "(+++-) ± (++-) ± (-+-) ± (+--)", {"+++-", "++-+", "-+--", "+---"}, {1, 2, 3, 4, 5}, 4,
         "(++-) -> (++-+), (-+-) -> (-+--), (+--) -> (+---)"},
        {17, 10, 7, 1, 1, "(+++-) ± (++-) ± (---)", {"+++-", "++-+", "----"}, {1, 2}, 2, "(++-) -> (++-+), (---) -> (----)"},
        {18, 10, 8, 2, 2, "(+++-) ± (-+-) ± (+--)", {"+++-", "-+--", "+--+"}, {1, 2}, 2, "(-+-) -> (-+--), (+--) -> (+--+)"},
        {19, 10, 9, 2, 2, "(++-+) ± (-+-) ± (+--)", {"++-+", "+-+-", "-+--"}, {1, 2}, 2,
         "2 repairs valid and equivalent up to term order; alternative (++-+) ± (-+--) ± (+-+-)"},
        {20, 10, 9, 1, 1, "(-+-+) ± (++-) ± (+--)", {"-+-+", "+++-", "+---"}, {1, 2}, 2, "(++-) -> (+++-), (+--) -> (+---)"},
        {21, 10, 8, 1, 1, "(-++-) ± (++-) ± (+--)", {"-++-", "++-+", "+---"}, {1, 2}, 2, "(++-) -> (++-+), (+--) -> (+---)"},
        {22, 10, 7, 2, 2, "(++++) ± (-+-) ± (+--)", {"++++", "-+--", "+---"}, {1, 2}, 2, "(-+-) -> (-+--), (+--) -> (+---)"},
        {23, 11, 10, 2, 2, "(+++-) ± (-+-) ± (---) ± (+--)", {"+++-", "+-+-", "-+--", "+--+"}, {1, 2, 3, 4}, 2,
         "2 repairs valid; alternative (+++-) ± (-+--) ± (----) ± (+--+)"},
        {24, 11, 10, 1, 1, "(-++-) ± (++-) ± (+--) ± (---)", {"-++-", "++-+", "+---", "----"}, {1, 2, 3, 4}, 2,
         "(++-) -> (++-+), (+--) -> (+---), (---) -> (----)"},
        {25, 11, 10, 3, 3, "(++++) ± (-+-) ± (+--) ± (+--)", {"++++", "-+-+", "+---", "-+--"}, {1, 2, 3, 4}, 2,
         "printed string equals row 26; 6 repairs valid for gamma(10;3)"},
        {26, 11, 10, 4, 4, "(++++) ± (-+-) ± (+--) ± (+--)", {"++++", "+-+-", "+---", "-+--"}, {1, 2, 3, 4}, 2,
         "printed string equals row 25; 6 repairs valid for gamma(10;4)"},
        {27, 12, 11, 4, 4, "(-+-+) ± (++-) ± (---) ± (+--)", {"-+-+", "+++-", "----", "+--+"}, {1, 2, 3, 4}, 2,
         "2 repairs valid; alternative (-+-+) ± (++--) ± (--+-) ± (+--+)"},
        {28, 12, 11, 3, 3, "(-++-) ± (++-) ± (---) ± (+--)", {"-++-", "++-+", "----", "+-+-"}, {1, 2, 3, 4}, 2,
         "3 repairs valid; first taken"},
        {29, 12, 11, 1, 1, "(++++) ± (-+-) ± (+--) ± (+--)", {"++++", "+-+-", "+--+", "-+--"}, {1, 2, 3, 4}, 2,
         "6 repairs valid; first taken"},
        {30, 12, 11, 2, 2, "(++++) ± (-+-) ± (-+-) ± (+--)", {"++++", "-++-", "-+-+", "+---"}, {1, 2, 3, 4}, 2,
         "4 repairs valid; first taken"},
    };
    // clang-format on
    return t;
}

std::vector<TensorElement> expand_row(const TableIRow& r)
{
    int n = static_cast<int>(r.support.size());
    std::vector<TensorElement> out;
    for (int j = 0; j < (1 << (n - 1)); ++j) {
        TensorElement v = TensorElement::basis(tuple_from_string(r.support[0]));
        for (int i = 1; i < n; ++i) {
            bool neg = (j >> (n - 1 - i)) & 1;
            v[tuple_from_string(r.support[i])] += neg ? -1 : 1;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace atlas
