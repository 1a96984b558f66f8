// Regenerates the bundled fiber data under data/. The builders in
// src/kodaira.cpp are the single source of truth; this tool just serializes
// them so the files can be inspected, shipped, and corrupted on purpose in
// tests.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mzeta/kodaira.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data";
    fs::create_directories(out_dir + "/kodaira");
    fs::create_directories(out_dir + "/neron");
    for (const auto& inst : mzeta::bundled_instances()) {
        mzeta::SncdModel model = mzeta::kodaira_sncd(inst.tag, inst.n);
        mzeta::NeronData nd = mzeta::kodaira_neron(inst.tag, inst.n);
        {
            std::ofstream out(out_dir + "/kodaira/" + inst.name + ".json");
            out << model.to_json();
        }
        {
            std::ofstream out(out_dir + "/neron/" + inst.name + ".json");
            out << nd.to_json();
        }
        std::cout << inst.name << ": " << model.components.size() << " components, "
                  << model.strata.size() << " strata, e = " << nd.e
                  << ", c = " << mzeta::rat_to_string(nd.c) << "\n";
    }
    return 0;
}
