// Emits every non-isomorphic simple graph of a given order (or all orders up
// to it) as graph6 lines, for feeding the scan commands without an external
// generator.

#include <CLI11.hpp>

#include <iostream>

#include "subkdom/enumerate.hpp"
#include "subkdom/graph6.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exhaustive non-isomorphic graph generator (graph6 output)"};
    int order = 0;
    bool cumulative = false;
    app.add_option("n", order, "number of vertices")->required()->check(CLI::Range(1, 9));
    app.add_flag("--upto", cumulative, "emit all orders 1..n");
    CLI11_PARSE(app, argc, argv);

    try {
        for (int n = cumulative ? 1 : order; n <= order; ++n)
            subkdom::for_each_nonisomorphic(
                n, [](const subkdom::Graph& g) { std::cout << subkdom::encode_graph6(g) << "\n"; });
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
