#include "atlas/acceptance.hpp"

#include "CLI11.hpp"

#include <cstdio>

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria 1-11"};
    atlas::AcceptanceOptions opt;
    app.add_option("--seed", opt.seed);
    app.add_option("--only", opt.only, "criterion ids");
    CLI11_PARSE(app, argc, argv);
    auto results = atlas::run_acceptance(opt, [](const atlas::CriterionResult& r) {
        std::printf("criterion %2d %-12s %s: %s (%.1f s)\n", r.id, atlas::to_string(r.status).c_str(), r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    });
    return atlas::acceptance_exit_code(results) == 0 ? 0 : 1;
}
