#pragma once

#include <map>
#include <set>
#include <string>

#include "ralab/mir.hpp"

namespace ralab {

// Hardware model: register files, reserved slots, banks, placement policy.
struct TargetDescriptor {
    std::string name;
    std::map<RegFile, int> files;               // file -> size in 32-bit units
    std::set<std::pair<RegFile, int>> reserved; // (file, unit index)
    int bank_count = 1;
    bool has_acc_file = false;
    std::map<int, int> alignment_rules;         // width_bits -> required index alignment
    std::map<RegClass, RegFile> class_files;    // placement policy per register class
    RegFile bool_file = RegFile::SGPR;          // where 1-bit values live

    int file_size(RegFile f) const;
    bool is_reserved(RegFile f, int index) const;
    // Placement file for a virtual register (Bool overrides its class).
    RegFile placement_file(const VirtualReg& v) const;
    int required_alignment(int width_bits) const;  // 1 when no rule
    // Usable units in a file = size - reserved count.
    int free_units(RegFile f) const;
};

std::string target_to_json(const TargetDescriptor& t);
TargetDescriptor target_from_json(const std::string& text);

// Loads "nv-rtx-like" / "amd-cdna-like" from the data dir, or any path to a
// descriptor JSON file.
TargetDescriptor load_target(const std::string& name_or_path);

}  // namespace ralab
