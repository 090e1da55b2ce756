/*
   Copyright 2026 The gasgauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gasgauge/gasvm/interpreter.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace gasgauge::gasvm {

using frontend::AssignOp;
using frontend::BinOp;
using frontend::ContractAst;
using frontend::Expr;
using frontend::ExprKind;
using frontend::FunctionDecl;
using frontend::RefKind;
using frontend::Stmt;
using frontend::StmtKind;
using frontend::StmtList;
using frontend::TypeKind;

ArrayValue ArrayValue::of(std::vector<U256> elems) {
    ArrayValue a;
    a.length = elems.size();
    a.dense = std::move(elems);
    return a;
}

ArrayValue ArrayValue::lazy(const U256& length, const U256& fill) {
    ArrayValue a;
    a.length = length;
    a.fill = fill;
    return a;
}

U256 ArrayValue::get(const U256& index) const {
    if (index < dense.size()) {
        return dense[static_cast<std::size_t>(index)];
    }
    if (auto it = sparse.find(index); it != sparse.end()) {
        return it->second;
    }
    return fill;
}

void ArrayValue::set(const U256& index, const U256& v) {
    if (index < dense.size()) {
        dense[static_cast<std::size_t>(index)] = v;
    } else {
        sparse[index] = v;
    }
}

void ArrayValue::push(const U256& v) {
    if (length == dense.size()) {
        dense.push_back(v);
    } else {
        sparse[length] = v;
    }
    length += 1;
}

std::string describe(const ExecOutcome& o) {
    struct V {
        std::string operator()(const Completed& c) const {
            return "Completed{gasUsed=" + std::to_string(c.gasUsed) + ", gasLeft=" + std::to_string(c.gasLeft) + "}";
        }
        std::string operator()(const OutOfGas&) const { return "OutOfGas"; }
        std::string operator()(const Reverted& r) const { return "Reverted{" + r.message + "}"; }
        std::string operator()(const IterationCapExceeded& c) const {
            return "IterationCapExceeded{loop " + std::to_string(c.loopId) + "}";
        }
    };
    return std::visit(V{}, o);
}

Gas static_cost(const Expr& e, const GasCostModel& m) {
    Gas kids = 0;
    for (const auto& k : e.kids) {
        kids += static_cost(*k, m);
    }
    switch (e.kind) {
        case ExprKind::Number:
        case ExprKind::Bool:
        case ExprKind::String: return 0;
        case ExprKind::Ident: return e.ref.kind == RefKind::State ? m.storageRead : m.memRead;
        case ExprKind::Not:
        case ExprKind::GasLeft: return kids + m.compare;
        case ExprKind::Binary: return kids + (frontend::is_arith(e.op) ? m.arith : m.compare);
        case ExprKind::Index: {
            const Expr& base = *e.kids[0];
            return static_cost(*e.kids[1], m) + (base.ref.kind == RefKind::State ? m.storageRead : m.memRead);
        }
        case ExprKind::Length: return e.kids[0]->ref.kind == RefKind::State ? m.storageRead : m.memRead;
        case ExprKind::Convert: return kids;
        case ExprKind::Call: return kids + m.perStatement;
    }
    return kids;
}

namespace {

struct OogSignal {};
struct RevertSignal {
    std::string message;
    Span span;
};
struct CapSignal {
    int loopId;
};

enum class Flow { Normal, Returned };

struct Frame {
    const FunctionDecl* fn{nullptr};
    std::vector<Value> params;
    std::vector<U256> locals;
    std::optional<U256> ret;
};

const U256 kAddressMask = (U256(1) << 160) - 1;

class Machine {
  public:
    Machine(const ContractAst& ast, const GasCostModel& model, const Overrides& ov, bool trace)
        : ast_(ast), m_(model), ov_(ov), traceOn_(trace) {}

    Execution call(const CallSpec& spec) {
        Execution ex{Completed{}, 0, std::nullopt, {}, {}};
        const FunctionDecl* fn = resolve(spec.function);
        check_args(*fn, spec.args);
        deploy(spec.storageSeed);
        charging_ = true;
        try {
            stmtSpan_ = fn->span;
            charge(m_.txBase, "txBase");
            std::optional<U256> ret = invoke(*fn, spec.args);
            ex.outcome = Completed{m_.blockGasLimit - used_, used_, fn->returnType ? ret : std::nullopt};
        } catch (const OogSignal&) {
            ex.outcome = OutOfGas{stmtSpan_};
        } catch (const RevertSignal& r) {
            ex.outcome = Reverted{r.message, r.span};
        } catch (const CapSignal& c) {
            ex.outcome = IterationCapExceeded{c.loopId};
        }
        ex.gasUsed = used_;
        ex.sample = std::move(sample_);
        ex.iterations = std::move(iterations_);
        ex.trace = std::move(trace_);
        return ex;
    }

  private:
    const FunctionDecl* resolve(const std::string& name) const {
        if (name.find('(') != std::string::npos) {
            if (const auto* f = ast_.function_by_signature(name)) {
                return f;
            }
        } else if (int i = ast_.find_function(name); i >= 0) {
            return &ast_.functions[static_cast<std::size_t>(i)];
        }
        throw Error(ErrorKind::Analysis, "no function '" + name + "' in contract " + ast_.name);
    }

    static void check_args(const FunctionDecl& fn, const std::vector<Value>& args) {
        if (args.size() != fn.params.size()) {
            throw Error(ErrorKind::Analysis, fn.signature() + " expects " + std::to_string(fn.params.size()) +
                                                 " arguments, got " + std::to_string(args.size()));
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
            bool wantArray = fn.params[i].type.is_array();
            bool isArray = std::holds_alternative<ArrayValue>(args[i]);
            bool isScalar = std::holds_alternative<U256>(args[i]);
            if (wantArray ? !isArray : !isScalar) {
                throw Error(ErrorKind::Analysis, "argument " + std::to_string(i) + " of " + fn.signature() +
                                                     " does not match " + type_name(fn.params[i].type));
            }
        }
    }

    void deploy(const std::map<std::string, Value>& seed) {
        storage_.clear();
        for (const auto& v : ast_.stateVars) {
            if (v.type.is_array()) {
                storage_.emplace_back(ArrayValue{});
            } else if (v.type.kind == TypeKind::Mapping) {
                storage_.emplace_back(Mapping{});
            } else {
                storage_.emplace_back(U256(0));
            }
        }
        charging_ = false;
        Frame deployFrame;
        frames_.push_back(&deployFrame);
        try {
            for (std::size_t i = 0; i < ast_.stateVars.size(); ++i) {
                if (ast_.stateVars[i].init) {
                    storage_[i] = eval(*ast_.stateVars[i].init);
                }
            }
            for (const auto& f : ast_.functions) {
                if (f.isConstructor) {
                    std::vector<Value> args;
                    for (const auto& p : f.params) {
                        args.push_back(p.type.is_array() ? Value{ArrayValue{}} : Value{U256(0)});
                    }
                    invoke(f, args);
                }
            }
        } catch (const RevertSignal& r) {
            throw Error(ErrorKind::Analysis, "deployment reverted: " + r.message, r.span);
        } catch (const CapSignal&) {
            throw Error(ErrorKind::Analysis, "deployment exceeded the iteration cap");
        }
        frames_.pop_back();
        iterations_.clear();
        sample_.reset();
        for (const auto& [name, value] : seed) {
            int i = ast_.find_state(name);
            if (i < 0) {
                throw Error(ErrorKind::Analysis, "storage seed names unknown state variable '" + name + "'");
            }
            if (storage_[static_cast<std::size_t>(i)].index() != value.index()) {
                throw Error(ErrorKind::Analysis, "storage seed for '" + name + "' has the wrong shape");
            }
            storage_[static_cast<std::size_t>(i)] = value;
        }
    }

    void charge(Gas cost, std::string_view what) {
        if (!charging_ || cost == 0) {
            return;
        }
        used_ += cost;
        if (traceOn_) {
            trace_.push_back({stmtSpan_, what, cost, used_});
        }
        if (used_ > m_.blockGasLimit) {
            throw OogSignal{};
        }
    }

    [[noreturn]] void revert(std::string message, Span span) { throw RevertSignal{std::move(message), span}; }

    Gas gas_left() const { return used_ >= m_.blockGasLimit ? 0 : m_.blockGasLimit - used_; }

    Frame& frame() { return *frames_.back(); }

    std::optional<U256> invoke(const FunctionDecl& fn, std::vector<Value> args) {
        if (frames_.size() >= m_.callDepthCap) {
            revert("call depth exceeded", fn.span);
        }
        Frame f;
        f.fn = &fn;
        f.params = std::move(args);
        f.locals.assign(fn.locals.size(), U256(0));
        frames_.push_back(&f);
        list(fn.body);
        frames_.pop_back();
        if (f.ret) {
            return f.ret;
        }
        if (fn.returnLocal >= 0) {
            return f.locals[static_cast<std::size_t>(fn.returnLocal)];
        }
        return fn.returnType ? std::optional<U256>(U256(0)) : std::nullopt;
    }

    // ---- storage access ----

    Value& state(int index) { return storage_[static_cast<std::size_t>(index)]; }

    ArrayValue& array_ref(const Expr& base) {
        if (base.ref.kind == RefKind::State) {
            return std::get<ArrayValue>(state(base.ref.index));
        }
        return std::get<ArrayValue>(frame().params[static_cast<std::size_t>(base.ref.index)]);
    }

    Gas read_cost(const Expr& e) const { return e.ref.kind == RefKind::State ? m_.storageRead : m_.memRead; }
    Gas write_cost(const Expr& e) const { return e.ref.kind == RefKind::State ? m_.storageWrite : m_.memRead; }

    U256 load_ident(const Expr& e) {
        switch (e.ref.kind) {
            case RefKind::Param: return std::get<U256>(frame().params[static_cast<std::size_t>(e.ref.index)]);
            case RefKind::Local: return frame().locals[static_cast<std::size_t>(e.ref.index)];
            case RefKind::State: return std::get<U256>(state(e.ref.index));
            default: throw Error(ErrorKind::Internal, "unresolved identifier '" + e.name + "'", e.span);
        }
    }

    void store_ident(const Expr& e, const U256& v) {
        switch (e.ref.kind) {
            case RefKind::Param: frame().params[static_cast<std::size_t>(e.ref.index)] = v; return;
            case RefKind::Local: frame().locals[static_cast<std::size_t>(e.ref.index)] = v; return;
            case RefKind::State: state(e.ref.index) = v; return;
            default: throw Error(ErrorKind::Internal, "unresolved identifier '" + e.name + "'", e.span);
        }
    }

    // Reads base[index]; the base identifier itself is not charged separately.
    U256 load_index(const Expr& e, const U256& index) {
        const Expr& base = *e.kids[0];
        charge(read_cost(base), base.ref.kind == RefKind::State ? "storageRead" : "memRead");
        if (base.type.kind == TypeKind::Mapping) {
            const auto& map = std::get<Mapping>(state(base.ref.index));
            auto it = map.find(index);
            return it == map.end() ? U256(0) : it->second;
        }
        const ArrayValue& arr = array_ref(base);
        if (index >= arr.length) {
            revert("index out of bounds", e.span);
        }
        return arr.get(index);
    }

    void store_index(const Expr& e, const U256& index, const U256& v) {
        const Expr& base = *e.kids[0];
        charge(write_cost(base), base.ref.kind == RefKind::State ? "storageWrite" : "memWrite");
        if (base.type.kind == TypeKind::Mapping) {
            std::get<Mapping>(state(base.ref.index))[index] = v;
            return;
        }
        ArrayValue& arr = array_ref(base);
        if (index >= arr.length) {
            revert("index out of bounds", e.span);
        }
        arr.set(index, v);
    }

    // ---- expressions ----

    U256 arith(BinOp op, const U256& a, const U256& b, Span span) {
        try {
            switch (op) {
                case BinOp::Add: return a + b;
                case BinOp::Sub:
                    if (b > a) {
                        revert("arithmetic underflow", span);
                    }
                    return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div:
                    if (b == 0) {
                        revert("division by zero", span);
                    }
                    return a / b;
                case BinOp::Mod:
                    if (b == 0) {
                        revert("division by zero", span);
                    }
                    return a % b;
                default: break;
            }
        } catch (const std::overflow_error&) {
            revert("arithmetic overflow", span);
        } catch (const std::range_error&) {
            revert("arithmetic overflow", span);
        }
        throw Error(ErrorKind::Internal, "not an arithmetic operator");
    }

    U256 compare(BinOp op, const U256& a, const U256& b) {
        bool r = false;
        switch (op) {
            case BinOp::Lt: r = a < b; break;
            case BinOp::Le: r = a <= b; break;
            case BinOp::Gt: r = a > b; break;
            case BinOp::Ge: r = a >= b; break;
            case BinOp::Eq: r = a == b; break;
            case BinOp::Ne: r = a != b; break;
            default: break;
        }
        return r ? 1 : 0;
    }

    U256 eval_scalar(const Expr& e) {
        switch (e.kind) {
            case ExprKind::Number:
            case ExprKind::Bool: return e.value;
            case ExprKind::String: return 0;
            case ExprKind::Ident:
                charge(read_cost(e), e.ref.kind == RefKind::State ? "storageRead" : "memRead");
                return load_ident(e);
            case ExprKind::Not: {
                U256 v = eval_scalar(*e.kids[0]);
                charge(m_.compare, "compare");
                return v == 0 ? 1 : 0;
            }
            case ExprKind::GasLeft: charge(m_.compare, "compare"); return gas_left();
            case ExprKind::Binary: {
                if (e.op == BinOp::And || e.op == BinOp::Or) {
                    U256 l = eval_scalar(*e.kids[0]);
                    charge(m_.compare, "compare");
                    if ((e.op == BinOp::And) == (l == 0)) {
                        return l == 0 ? 0 : 1;
                    }
                    return eval_scalar(*e.kids[1]) == 0 ? 0 : 1;
                }
                U256 a = eval_scalar(*e.kids[0]);
                U256 b = eval_scalar(*e.kids[1]);
                if (frontend::is_arith(e.op)) {
                    charge(m_.arith, "arith");
                    return arith(e.op, a, b, e.span);
                }
                charge(m_.compare, "compare");
                return compare(e.op, a, b);
            }
            case ExprKind::Index: {
                U256 idx = eval_scalar(*e.kids[1]);
                return load_index(e, idx);
            }
            case ExprKind::Length: {
                const Expr& base = *e.kids[0];
                charge(read_cost(base), base.ref.kind == RefKind::State ? "storageRead" : "memRead");
                return array_ref(base).length;
            }
            case ExprKind::Convert: {
                U256 v = eval_scalar(*e.kids[0]);
                return e.convertTo == TypeKind::Address ? U256(v & kAddressMask) : v;
            }
            case ExprKind::Call: {
                std::optional<U256> r = call_expr(e);
                return r.value_or(U256(0));
            }
        }
        return 0;
    }

    Value eval(const Expr& e) {
        if (e.type.is_array()) {
            if (e.kind != ExprKind::Ident) {
                throw Error(ErrorKind::Internal, "array-valued expression is not a variable", e.span);
            }
            charge(read_cost(e), e.ref.kind == RefKind::State ? "storageRead" : "memRead");
            return array_ref(e);
        }
        return eval_scalar(e);
    }

    std::optional<U256> call_expr(const Expr& e) {
        charge(m_.perStatement, "call");
        const FunctionDecl& callee = ast_.functions[static_cast<std::size_t>(e.ref.index)];
        std::vector<Value> args;
        args.reserve(e.kids.size());
        for (const auto& k : e.kids) {
            args.push_back(eval(*k));
        }
        Span saved = stmtSpan_;
        std::optional<U256> r = invoke(callee, std::move(args));
        stmtSpan_ = saved;
        return r;
    }

    // ---- statements ----

    Flow list(const StmtList& stmts) {
        for (const auto& s : stmts) {
            if (stmt(*s) == Flow::Returned) {
                return Flow::Returned;
            }
        }
        return Flow::Normal;
    }

    void assign(const Stmt& s) {
        const Expr& t = *s.target;
        if (t.kind == ExprKind::Index) {
            U256 idx = eval_scalar(*t.kids[1]);
            U256 v;
            if (s.op == AssignOp::Set) {
                v = eval_scalar(*s.value);
            } else {
                U256 rhs = eval_scalar(*s.value);
                U256 cur = load_index(t, idx);
                charge(m_.arith, "arith");
                v = arith(compound_op(s.op), cur, rhs, s.span);
            }
            store_index(t, idx, v);
            return;
        }
        U256 v;
        if (s.op == AssignOp::Set) {
            v = eval_scalar(*s.value);
        } else {
            U256 rhs = eval_scalar(*s.value);
            charge(read_cost(t), t.ref.kind == RefKind::State ? "storageRead" : "memRead");
            U256 cur = load_ident(t);
            charge(m_.arith, "arith");
            v = arith(compound_op(s.op), cur, rhs, s.span);
        }
        charge(write_cost(t), t.ref.kind == RefKind::State ? "storageWrite" : "memWrite");
        if (t.type.kind == TypeKind::Address) {
            v &= kAddressMask;
        }
        store_ident(t, v);
    }

    static BinOp compound_op(AssignOp op) {
        switch (op) {
            case AssignOp::Add: return BinOp::Add;
            case AssignOp::Sub: return BinOp::Sub;
            case AssignOp::Mul: return BinOp::Mul;
            case AssignOp::Div: return BinOp::Div;
            default: return BinOp::Mod;
        }
    }

    void incdec(const Stmt& s) {
        const Expr& t = *s.target;
        BinOp op = s.increment ? BinOp::Add : BinOp::Sub;
        if (t.kind == ExprKind::Index) {
            U256 idx = eval_scalar(*t.kids[1]);
            U256 cur = load_index(t, idx);
            charge(m_.arith, "arith");
            store_index(t, idx, arith(op, cur, 1, s.span));
            return;
        }
        charge(read_cost(t), t.ref.kind == RefKind::State ? "storageRead" : "memRead");
        U256 cur = load_ident(t);
        charge(m_.arith, "arith");
        U256 v = arith(op, cur, 1, s.span);
        charge(write_cost(t), t.ref.kind == RefKind::State ? "storageWrite" : "memWrite");
        store_ident(t, v);
    }

    Flow stmt(const Stmt& s) {
        if (s.kind == StmtKind::Block) {
            return list(s.body);
        }
        if (s.kind == StmtKind::For || s.kind == StmtKind::While) {
            return loop(s);
        }
        stmtSpan_ = s.span;
        charge(m_.perStatement, "statement");
        switch (s.kind) {
            case StmtKind::VarDecl: {
                U256 v = s.value ? eval_scalar(*s.value) : U256(0);
                charge(m_.memRead, "memWrite");
                if (s.declType.kind == TypeKind::Address) {
                    v &= kAddressMask;
                }
                frame().locals[static_cast<std::size_t>(s.localIndex)] = v;
                return Flow::Normal;
            }
            case StmtKind::Assign: assign(s); return Flow::Normal;
            case StmtKind::IncDec: incdec(s); return Flow::Normal;
            case StmtKind::Call: call_expr(*s.value); return Flow::Normal;
            case StmtKind::Push: {
                U256 v = eval_scalar(*s.value);
                charge(m_.arrayPushStorage, "push");
                std::get<ArrayValue>(state(s.target->ref.index)).push(v);
                return Flow::Normal;
            }
            case StmtKind::Require: {
                U256 c = eval_scalar(*s.cond);
                if (c == 0) {
                    revert(s.message.value_or("require failed"), s.span);
                }
                return Flow::Normal;
            }
            case StmtKind::Return:
                if (s.value) {
                    frame().ret = eval_scalar(*s.value);
                } else if (frame().fn && frame().fn->returnLocal >= 0) {
                    frame().ret = frame().locals[static_cast<std::size_t>(frame().fn->returnLocal)];
                }
                return Flow::Returned;
            case StmtKind::If: {
                U256 c = eval_scalar(*s.cond);
                if (c != 0) {
                    return list(s.body);
                }
                return s.hasElse ? list(s.elseBody) : Flow::Normal;
            }
            default: return Flow::Normal;
        }
    }

    Flow loop(const Stmt& s) {
        auto it = ov_.find(s.loopId);
        const LoopOverride* ov = it == ov_.end() ? nullptr : &it->second;
        bool disabled = ov && ov->kind == LoopOverride::Kind::Disable;
        bool counted = ov && !disabled;
        bool measuring = ov && ov->kind == LoopOverride::Kind::Measure && !sample_;

        stmtSpan_ = s.span;
        if (counted) {
            charge(m_.counter_decl_cost(), "counter");
        }
        if (s.init && stmt(*s.init) == Flow::Returned) {
            return Flow::Returned;
        }
        stmtSpan_ = s.span;
        Gas mark = used_;
        if (measuring) {
            sample_ = LoopSample{s.loopId, gas_left(), {}, ov->count};
        }
        charge(m_.loopInit, "loopInit");
        if (disabled) {
            charge(m_.compare, "compare");
            return Flow::Normal;
        }
        Gas condCost = counted ? static_cost(*s.cond, m_) : 0;
        std::uint64_t count = 0;
        auto& total = iterations_[s.loopId];
        while (true) {
            stmtSpan_ = s.span;
            if (measuring && count >= 1 && sample_->iterationGas.size() < sample_->requested) {
                sample_->iterationGas.push_back(used_ - mark);
                mark = used_;
            }
            if (counted) {
                charge(condCost, "condition");
                charge(m_.counter_check_cost(), "counter");
                if (count >= ov->count) {
                    break;
                }
            } else if (eval_scalar(*s.cond) == 0) {
                break;
            }
            ++count;
            if (++total > m_.iterationCap) {
                throw CapSignal{s.loopId};
            }
            if (list(s.body) == Flow::Returned) {
                return Flow::Returned;
            }
            if (counted) {
                stmtSpan_ = s.span;
                charge(m_.counter_increment_cost(), "counter");
            }
            if (s.update) {
                stmt(*s.update);
            }
        }
        return Flow::Normal;
    }

    const ContractAst& ast_;
    const GasCostModel& m_;
    const Overrides& ov_;
    bool traceOn_;
    bool charging_{false};
    Gas used_{0};
    Span stmtSpan_;
    std::vector<Value> storage_;
    std::vector<Frame*> frames_;
    std::map<int, std::uint64_t> iterations_;
    std::optional<LoopSample> sample_;
    std::vector<TraceRecord> trace_;
};

}  // namespace

Execution run(const ContractAst& ast, const CallSpec& call, const GasCostModel& model, const Overrides& overrides,
              RunOptions options) {
    if (!ast.checked) {
        throw Error(ErrorKind::Internal, "execute requires a type-checked contract");
    }
    int measured = 0;
    for (const auto& [id, ov] : overrides) {
        if (id < 0 || static_cast<std::size_t>(id) >= ast.loops.size()) {
            throw Error(ErrorKind::Analysis, "override names unknown loop " + std::to_string(id));
        }
        measured += ov.kind == LoopOverride::Kind::Measure ? 1 : 0;
    }
    if (measured > 1) {
        throw Error(ErrorKind::Analysis, "at most one loop may be measured per call");
    }
    Machine machine(ast, model, overrides, options.trace);
    return machine.call(call);
}

ExecOutcome execute(const ContractAst& ast, const CallSpec& call, const GasCostModel& model,
                    const Overrides& overrides) {
    return run(ast, call, model, overrides).outcome;
}

MeasureKResult measure_k(const ContractAst& ast, const CallSpec& call, const GasCostModel& model, int loopId,
                         std::uint64_t k, const Overrides& others) {
    if (k < 2) {
        throw Error(ErrorKind::Analysis, "measurement needs at least two iterations");
    }
    Overrides ov = others;
    ov[loopId] = LoopOverride::measure(k);
    Execution ex = run(ast, call, model, ov);
    if (!ex.sample) {
        throw MeasurementError("loop " + std::to_string(loopId) + " was not reached", std::nullopt, ex.outcome);
    }
    if (!ex.sample->complete()) {
        throw MeasurementError("loop " + std::to_string(loopId) + " stopped after " +
                                   std::to_string(ex.sample->iterationGas.size()) + " measured iterations: " +
                                   describe(ex.outcome),
                               ex.sample, ex.outcome);
    }
    MeasureKResult r;
    r.initialGas = ex.sample->initialGas;
    r.iterationGas = ex.sample->iterationGas;
    r.gas1 = r.iterationGas[0];
    Gas rest = 0;
    for (std::size_t i = 1; i < r.iterationGas.size(); ++i) {
        rest += r.iterationGas[i];
    }
    r.gas2 = rest / (r.iterationGas.size() - 1);
    return r;
}

MeasureTwoResult measure_two(const ContractAst& ast, const CallSpec& call, const GasCostModel& model, int loopId,
                             const Overrides& others) {
    MeasureKResult r = measure_k(ast, call, model, loopId, 2, others);
    return {r.initialGas, r.gas1, r.gas2};
}

std::string format_trace(const std::vector<TraceRecord>& trace, const SourceFile& src) {
    std::ostringstream out;
    for (const auto& t : trace) {
        Location loc = src.location(t.span.begin);
        std::string_view text = src.text(t.span);
        text = text.substr(0, text.find('\n'));
        out << std::setw(4) << loc.line << ":" << std::left << std::setw(4) << loc.column << std::right << "  "
            << std::left << std::setw(12) << t.what << std::right << std::setw(6) << t.cost << std::setw(10)
            << t.cumulative << "  " << text << "\n";
    }
    return out.str();
}

}  // namespace gasgauge::gasvm
