// Writes the gallery spec files into the directory given as the only argument.
#include "gtable/gallery.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_spec_files DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    std::ofstream(dir + "/heisenberg.json") << gtable::spec_to_json(gtable::gallery::heisenberg_bracket_spec());
    std::ofstream(dir + "/s3_coalgebra.json") << gtable::spec_to_json(gtable::gallery::s3_coalgebra_spec());
    return 0;
}
