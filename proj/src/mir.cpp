#include "ralab/mir.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ralab/errors.hpp"

namespace ralab {

const char* to_string(RegClass c) {
    switch (c) {
        case RegClass::Scalar: return "Scalar";
        case RegClass::Vector: return "Vector";
        case RegClass::AccVector: return "AccVector";
    }
    return "?";
}

const char* to_string(ValueType t) {
    switch (t) {
        case ValueType::Int: return "Int";
        case ValueType::Float: return "Float";
        case ValueType::Bool: return "Bool";
    }
    return "?";
}

const char* to_string(RegFile f) {
    switch (f) {
        case RegFile::SGPR: return "SGPR";
        case RegFile::VGPR: return "VGPR";
        case RegFile::AccVGPR: return "AccVGPR";
        case RegFile::GPR: return "GPR";
    }
    return "?";
}

const char* to_string(MirDialect d) {
    switch (d) {
        case MirDialect::PtxLike: return "ptx";
        case MirDialect::AmdMirLike: return "amdmir";
        case MirDialect::NormalizedCommon: return "normalized";
    }
    return "?";
}

const char* to_string(IsaDialect d) {
    switch (d) {
        case IsaDialect::SassLike: return "sass";
        case IsaDialect::GcnLike: return "gcn";
    }
    return "?";
}

std::optional<RegFile> reg_file_from_string(const std::string& s) {
    if (s == "SGPR") return RegFile::SGPR;
    if (s == "VGPR") return RegFile::VGPR;
    if (s == "AccVGPR") return RegFile::AccVGPR;
    if (s == "GPR") return RegFile::GPR;
    return std::nullopt;
}

std::optional<MirDialect> mir_dialect_from_string(const std::string& s) {
    if (s == "ptx") return MirDialect::PtxLike;
    if (s == "amdmir") return MirDialect::AmdMirLike;
    if (s == "normalized") return MirDialect::NormalizedCommon;
    return std::nullopt;
}

std::optional<IsaDialect> isa_dialect_from_string(const std::string& s) {
    if (s == "sass") return IsaDialect::SassLike;
    if (s == "gcn") return IsaDialect::GcnLike;
    return std::nullopt;
}

std::string PhysicalReg::str() const {
    std::string s = to_string(file);
    s += "[" + std::to_string(index);
    if (units > 1) s += ":" + std::to_string(index + units - 1);
    s += "]";
    return s;
}

std::string SymRef::str() const {
    switch (kind) {
        case Kind::Arg: return "SYM_ARG" + std::to_string(index);
        case Kind::Tid: return "SYM_TID";
        case Kind::Bid: return "SYM_BID";
    }
    return "?";
}

const MirBlock* MirFunction::find_block(const std::string& label) const {
    for (const auto& b : blocks)
        if (b.label == label) return &b;
    return nullptr;
}

int MirFunction::block_index(const std::string& label) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].label == label) return static_cast<int>(i);
    return -1;
}

int IsaFunction::block_index(const std::string& label) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].label == label) return static_cast<int>(i);
    return -1;
}

bool structurally_equal(const MirFunction& a, const MirFunction& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        const auto& ba = a.blocks[i];
        const auto& bb = b.blocks[i];
        if (ba.label != bb.label || ba.successors != bb.successors) return false;
        if (ba.instructions.size() != bb.instructions.size()) return false;
        for (size_t j = 0; j < ba.instructions.size(); ++j)
            if (!ba.instructions[j].structurally_equal_to(bb.instructions[j])) return false;
    }
    // Register attributes must agree for every id mentioned by either side.
    if (a.vreg_table.size() != b.vreg_table.size()) return false;
    for (const auto& [id, va] : a.vreg_table) {
        auto it = b.vreg_table.find(id);
        if (it == b.vreg_table.end() || !(it->second == va)) return false;
    }
    return true;
}

std::string Defect::str() const {
    std::string s = rule + " at " + (block.empty() ? "<function>" : block);
    if (seq >= 0) s += ":" + std::to_string(seq);
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
}

std::vector<Defect> validate_function(const MirFunction& f) {
    std::vector<Defect> out;
    auto defect = [&out](std::string block, int seq, std::string rule, std::string detail) {
        out.push_back({std::move(block), seq, std::move(rule), std::move(detail)});
    };

    if (f.blocks.empty()) {
        defect("", -1, "empty-function", "a function needs at least one block");
        return out;
    }

    std::map<std::string, int> label_index;
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        const auto& b = f.blocks[i];
        if (label_index.count(b.label))
            defect(b.label, -1, "duplicate-label", "");
        else
            label_index[b.label] = static_cast<int>(i);
    }

    // Entry uniqueness: exactly one block without predecessors.
    int entry_count = 0;
    for (const auto& b : f.blocks)
        if (b.predecessors.empty()) ++entry_count;
    if (entry_count != 1)
        defect(f.blocks.front().label, -1, "entry-count",
               std::to_string(entry_count) + " blocks have no predecessors");

    // Successor/predecessor mutual consistency and target resolution.
    for (const auto& b : f.blocks) {
        for (const auto& s : b.successors) {
            auto it = label_index.find(s);
            if (it == label_index.end()) {
                defect(b.label, -1, "unresolved-target", s);
                continue;
            }
            const auto& preds = f.blocks[it->second].predecessors;
            if (std::find(preds.begin(), preds.end(), b.label) == preds.end())
                defect(b.label, -1, "succ-pred-mismatch", s + " missing back edge");
        }
        for (const auto& p : b.predecessors) {
            auto it = label_index.find(p);
            if (it == label_index.end()) {
                defect(b.label, -1, "unresolved-predecessor", p);
                continue;
            }
            const auto& succs = f.blocks[it->second].successors;
            if (std::find(succs.begin(), succs.end(), b.label) == succs.end())
                defect(b.label, -1, "succ-pred-mismatch", p + " does not list this block");
        }
    }

    // Register declarations and widths.
    for (const auto& [id, v] : f.vreg_table) {
        bool ok_width = (v.width_bits == 1 && v.value_type == ValueType::Bool) ||
                        (v.width_bits > 0 && v.width_bits % 32 == 0);
        if (!ok_width)
            defect("", -1, "bad-width",
                   "vreg " + std::to_string(id) + " width " + std::to_string(v.width_bits));
    }
    for (const auto& b : f.blocks) {
        for (const auto& ins : b.instructions) {
            auto check = [&](int id) {
                if (!f.vreg_table.count(id))
                    defect(b.label, ins.seq, "unknown-vreg", std::to_string(id));
            };
            for (int d : ins.defs) check(d);
            for_each_use_reg(ins, check);
            // Branch operand targets must resolve.
            for (const auto& u : ins.uses)
                if (u.kind == MirOperand::Kind::Label && !label_index.count(u.text))
                    defect(b.label, ins.seq, "unresolved-target", u.text);
        }
    }
    return out;
}

std::string allocation_to_json(const AllocationMap& map, int indent) {
    nlohmann::ordered_json j;
    j["function"] = map.function;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [id, phys] : map.entries) {  // std::map<int,...>: numeric order
        nlohmann::ordered_json e;
        e["file"] = to_string(phys.file);
        auto irr = map.irregular.find(id);
        if (irr != map.irregular.end()) {
            e["indices"] = irr->second;
        } else {
            e["index"] = phys.index;
            e["units"] = phys.units;
        }
        entries[std::to_string(id)] = std::move(e);
    }
    j["entries"] = std::move(entries);
    nlohmann::ordered_json spills = nlohmann::ordered_json::object();
    for (const auto& [id, slot] : map.spills) spills[std::to_string(id)] = slot;
    j["spills"] = std::move(spills);
    return j.dump(indent);
}

AllocationMap allocation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), "valid JSON");
    }
    AllocationMap out;
    try {
        out.function = j.value("function", "");
        if (j.contains("entries")) {
            for (const auto& [key, val] : j.at("entries").items()) {
                int id = std::stoi(key);
                PhysicalReg p;
                auto file = reg_file_from_string(val.at("file").get<std::string>());
                if (!file) throw ParseError(1, 0, "register file name");
                p.file = *file;
                if (val.contains("indices")) {
                    auto list = val.at("indices").get<std::vector<int>>();
                    if (list.empty()) throw ParseError(1, 0, "nonempty indices");
                    p.index = *std::min_element(list.begin(), list.end());
                    p.units = static_cast<int>(list.size());
                    out.irregular[id] = std::move(list);
                } else {
                    p.index = val.at("index").get<int>();
                    p.units = val.value("units", 1);
                }
                if (p.index < 0 || p.units < 1) throw ParseError(1, 0, "non-negative placement");
                out.entries[id] = p;
            }
        }
        if (j.contains("spills"))
            for (const auto& [key, val] : j.at("spills").items())
                out.spills[std::stoi(key)] = val.get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 0, std::string("allocation schema: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError(1, 0, "integer vreg id key");
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string data_dir() {
#ifdef RALAB_DATA_DIR
    return RALAB_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace ralab
