#include "atlas/tables.hpp"
#include "doctest.h"

#include <fstream>
#include <sstream>

using namespace atlas;

static std::vector<std::vector<std::string>> read_tsv(const std::string& name)
{
    std::ifstream in(std::string(ATLAS_TABLES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t'))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

TEST_CASE("golden Table I file matches the built-in table")
{
    auto rows = read_tsv("table1.tsv");
    REQUIRE(rows.size() == table1().size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = table1()[i];
        const auto& c = rows[i];
        REQUIRE(c.size() >= 9);
        CHECK(std::stoi(c[0]) == r.row);
        CHECK(std::stoi(c[1]) == r.dim);
        CHECK(std::stoi(c[2]) == r.alpha);
        CHECK(std::stoi(c[3]) == r.gamma);
        CHECK(std::stoi(c[4]) == r.printed_gamma);
        CHECK(c[5] == r.printed);
        std::string sup;
        for (const auto& s : r.support)
            sup += (sup.empty() ? "(" : " (") + s + ")";
        CHECK(c[6] == sup);
        CHECK(std::stoi(c[8]) == r.delta_count);
    }
}

TEST_CASE("golden Table II file matches the built-in labels")
{
    auto rows = read_tsv("table2.tsv");
    size_t i = 0;
    for (size_t a = 0; a < alpha_labels().size(); ++a)
        for (size_t k = 0; k < gamma_beta_labels()[a].size(); ++k, ++i) {
            REQUIRE(i < rows.size());
            CHECK(rows[i][1] == label_string(alpha_labels()[a]));
            CHECK(rows[i][3] == label_string(gamma_beta_labels()[a][k]));
        }
    CHECK(i == rows.size());
}
