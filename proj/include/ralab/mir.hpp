#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace ralab {

enum class RegClass { Scalar, Vector, AccVector };
enum class ValueType { Int, Float, Bool };
enum class RegFile { SGPR, VGPR, AccVGPR, GPR };
enum class MirDialect { PtxLike, AmdMirLike, NormalizedCommon };
enum class IsaDialect { SassLike, GcnLike };

const char* to_string(RegClass c);
const char* to_string(ValueType t);
const char* to_string(RegFile f);
const char* to_string(MirDialect d);
const char* to_string(IsaDialect d);
std::optional<RegFile> reg_file_from_string(const std::string& s);
std::optional<MirDialect> mir_dialect_from_string(const std::string& s);
std::optional<IsaDialect> isa_dialect_from_string(const std::string& s);

// Virtual register: unbounded value name awaiting physical placement.
struct VirtualReg {
    int id = 0;
    RegClass reg_class = RegClass::Vector;
    ValueType value_type = ValueType::Int;
    int width_bits = 32;  // multiple of 32, or 1 for Bool

    int units() const { return width_bits == 1 ? 1 : width_bits / 32; }
    bool operator==(const VirtualReg&) const = default;
};

// Physical register: (file, first 32-bit unit, consecutive unit count).
struct PhysicalReg {
    RegFile file = RegFile::VGPR;
    int index = 0;
    int units = 1;

    bool operator==(const PhysicalReg&) const = default;
    auto operator<=>(const PhysicalReg&) const = default;
    bool overlaps(const PhysicalReg& o) const {
        return file == o.file && index < o.index + o.units && o.index < index + units;
    }
    std::string str() const;
};

struct SymRef {
    enum class Kind { Arg, Tid, Bid };
    Kind kind = Kind::Arg;
    int index = 0;  // argument slot; 0 for Tid/Bid

    bool operator==(const SymRef&) const = default;
    std::string str() const;
};

// One instruction operand. R is the register handle: int (vreg id) for MIR,
// PhysicalReg for ISA listings.
template <class R>
struct Operand {
    enum class Kind { Reg, Imm, FImm, Sym, Label, Addr, Special };
    Kind kind = Kind::Imm;
    R reg{};                 // Reg and Addr base
    long long imm = 0;       // Imm value / Addr offset
    double fimm = 0.0;       // FImm value
    SymRef sym{};            // Sym
    std::string text;        // Label target / Special token

    static Operand make_reg(R r) { Operand o; o.kind = Kind::Reg; o.reg = r; return o; }
    static Operand make_imm(long long v) { Operand o; o.kind = Kind::Imm; o.imm = v; return o; }
    static Operand make_fimm(double v) { Operand o; o.kind = Kind::FImm; o.fimm = v; return o; }
    static Operand make_sym(SymRef s) { Operand o; o.kind = Kind::Sym; o.sym = s; return o; }
    static Operand make_label(std::string l) { Operand o; o.kind = Kind::Label; o.text = std::move(l); return o; }
    static Operand make_addr(R base, long long off) {
        Operand o; o.kind = Kind::Addr; o.reg = base; o.imm = off; return o;
    }
    static Operand make_special(std::string t) { Operand o; o.kind = Kind::Special; o.text = std::move(t); return o; }

    bool is_reg_like() const { return kind == Kind::Reg || kind == Kind::Addr; }
    bool operator==(const Operand&) const = default;
};

template <class R>
struct Instruction {
    std::string opcode;      // normalized mnemonic once normalized; dialect mnemonic before
    std::string raw_opcode;  // original dialect mnemonic
    std::vector<R> defs;
    std::vector<Operand<R>> uses;
    std::optional<R> guard;  // predication: guard register is an extra use
    int seq = 0;

    bool structurally_equal_to(const Instruction& o) const {
        return opcode == o.opcode && defs == o.defs && uses == o.uses && guard == o.guard;
    }
};

template <class R>
struct BasicBlock {
    std::string label;
    std::vector<Instruction<R>> instructions;
    std::vector<std::string> successors;
    std::vector<std::string> predecessors;
};

using MirInstruction = Instruction<int>;
using MirBlock = BasicBlock<int>;
using MirOperand = Operand<int>;
using IsaInstruction = Instruction<PhysicalReg>;
using IsaBlock = BasicBlock<PhysicalReg>;
using IsaOperand = Operand<PhysicalReg>;

struct MirFunction {
    std::string name;
    MirDialect dialect = MirDialect::NormalizedCommon;
    std::vector<MirBlock> blocks;
    std::map<int, VirtualReg> vreg_table;

    // Bookkeeping outside structural identity: the raw source listing and the
    // discarded-metadata records (comments, directives) by block.
    std::string source_text;
    std::vector<std::string> metadata;

    const MirBlock* find_block(const std::string& label) const;
    int block_index(const std::string& label) const;  // -1 if absent
};

struct IsaFunction {
    std::string name;
    IsaDialect dialect = IsaDialect::SassLike;
    std::vector<IsaBlock> blocks;
    std::string source_text;

    int block_index(const std::string& label) const;
};

// Structural equality: blocks, labels, instructions, operands, and register
// attributes. Name, dialect-source text and metadata are excluded.
bool structurally_equal(const MirFunction& a, const MirFunction& b);

struct Defect {
    std::string block;
    int seq = -1;  // -1 when not tied to an instruction
    std::string rule;
    std::string detail;
    std::string str() const;
};

// Empty result iff every model invariant holds. Defects are data, not errors.
std::vector<Defect> validate_function(const MirFunction& f);

// Visit every register read by an instruction (uses, address bases, guard).
template <class R, class Fn>
void for_each_use_reg(const Instruction<R>& ins, Fn&& fn) {
    for (const auto& u : ins.uses)
        if (u.is_reg_like()) fn(u.reg);
    if (ins.guard) fn(*ins.guard);
}

struct AllocationMap {
    std::string function;
    std::map<int, PhysicalReg> entries;
    // Raw unit lists for entries given as {"indices": [...]}; kept verbatim so
    // realizability can flag non-consecutive placements.
    std::map<int, std::vector<int>> irregular;
    std::map<int, int> spills;

    bool operator==(const AllocationMap&) const = default;
};

// Byte-stable canonical JSON (keys ordered by integer vreg id).
std::string allocation_to_json(const AllocationMap& map, int indent = 2);
// Strict parse of the canonical function-level schema. Throws ParseError on
// malformed input; use verifier::parse_allocation for the error-taxonomy path.
AllocationMap allocation_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string data_dir();  // compiled-in default for shipped tables/targets

}  // namespace ralab
