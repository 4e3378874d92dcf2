// Regenerates the shipped corpus directory: groups through order 16, the L5
// example, the order-12 Moufang loop, and search-generated conjugacy closed
// exemplars with their generation provenance in comments.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "loopkit/constructions.hpp"
#include "loopkit/loopfile.hpp"
#include "loopkit/search.hpp"

using namespace loopkit;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: loopkit-gencorpus <output-dir>\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    auto write = [&dir](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        out << text;
        std::cout << "wrote " << (dir / name).string() << "\n";
    };

    {
        std::string text;
        for (int n = 2; n <= 16; ++n) {
            if (n > 2) text += "\n";
            text += print_loop_block("Z" + std::to_string(n), make::cyclic(n),
                                     "cyclic group of order " + std::to_string(n));
        }
        write("groups-cyclic.loops", text);
    }

    {
        std::string text;
        auto add = [&text](const std::string& name, const FiniteLoop& l, const std::string& c) {
            if (!text.empty()) text += "\n";
            text += print_loop_block(name, l, c);
        };
        add("V4", make::klein4(), "Klein four-group (Z2 x Z2)");
        add("Z2xZ4", make::direct_product(make::cyclic(2), make::cyclic(4)), "direct product Z2 x Z4");
        add("Z2xZ2xZ2", make::direct_product(make::cyclic(2), make::klein4()),
            "elementary abelian group of order 8");
        add("Z3xZ3", make::direct_product(make::cyclic(3), make::cyclic(3)), "direct product Z3 x Z3");
        add("Z2xZ6", make::direct_product(make::cyclic(2), make::cyclic(6)), "direct product Z2 x Z6");
        add("Z2xZ8", make::direct_product(make::cyclic(2), make::cyclic(8)), "direct product Z2 x Z8");
        add("Z4xZ4", make::direct_product(make::cyclic(4), make::cyclic(4)), "direct product Z4 x Z4");
        add("Z2xZ2xZ4", make::direct_product(make::klein4(), make::cyclic(4)),
            "direct product Z2 x Z2 x Z4");
        add("S3", make::symmetric3(), "symmetric group on 3 letters (= dihedral of order 6)");
        add("D4", make::dihedral(4), "dihedral group of order 8");
        add("D5", make::dihedral(5), "dihedral group of order 10");
        add("D6", make::dihedral(6), "dihedral group of order 12");
        add("D7", make::dihedral(7), "dihedral group of order 14");
        add("D8", make::dihedral(8), "dihedral group of order 16");
        add("Q8", make::dicyclic(2), "quaternion group of order 8");
        add("Q12", make::dicyclic(3), "dicyclic group of order 12");
        add("Q16", make::dicyclic(4), "generalized quaternion group of order 16");
        add("A4", make::alternating4(), "alternating group on 4 points");
        write("groups-classic.loops", text);
    }

    write("l5.loops",
          print_loop_block("L5", make::l5(),
                           "nonassociative order-5 loop; fails 3-PAPL at x=2"));
    write("moufang12.loops",
          print_loop_block("M12", make::moufang12(),
                           "Chein double M(S3,2): smallest nonassociative Moufang loop"));

    {
        std::string text;
        SearchQuery q6{6, {"cc"}, {"associative"}, 3, SearchQuery::Mode::exhaustive};
        auto hits6 = run_search(q6, {2});
        for (std::size_t i = 0; i < hits6.size(); ++i) {
            if (i) text += "\n";
            text += print_loop_block(
                "CC6_" + std::to_string(i + 1), hits6[i].loop,
                "found by exhaustive search: order 6, require cc, forbid associative\nhit " +
                    std::to_string(i + 1) + " of 40 in canonical order");
        }
        SearchQuery q8{8, {"cc"}, {"associative"}, 3, SearchQuery::Mode::exhaustive};
        auto hits8 = run_search(q8, {2});
        for (std::size_t i = 0; i < hits8.size(); ++i) {
            text += "\n" + print_loop_block(
                               "CC8_" + std::to_string(i + 1), hits8[i].loop,
                               "found by exhaustive search: order 8, require cc, forbid associative\n"
                               "hit " + std::to_string(i + 1) + " of 2520 in canonical order");
        }
        write("cc-exemplars.loops", text);
    }
    return 0;
}
