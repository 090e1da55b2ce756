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

#include "gasgauge/loopscan/cfg.hpp"

#include <algorithm>
#include <functional>

namespace gasgauge::loopscan {

using frontend::Stmt;
using frontend::StmtKind;
using frontend::StmtList;

std::vector<int> Cfg::successors(int block) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.from == block) {
            out.push_back(e.to);
        }
    }
    return out;
}

std::vector<int> Cfg::predecessors(int block) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.to == block) {
            out.push_back(e.from);
        }
    }
    return out;
}

int Cfg::count_edges(EdgeKind kind) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.kind == kind; }));
}

namespace {

class Builder {
  public:
    Cfg run(const frontend::FunctionDecl& fn) {
        int entry = fresh();
        int end = list(fn.body, entry);
        int exit = fresh();
        cfg_.blocks[static_cast<std::size_t>(exit)].isExit = true;
        cfg_.exit = exit;
        if (end >= 0) {
            edge(end, exit, EdgeKind::Seq);
        }
        for (int r : returns_) {
            edge(r, exit, EdgeKind::Seq);
        }
        cfg_.entry = entry;
        return std::move(cfg_);
    }

  private:
    int fresh() {
        int id = static_cast<int>(cfg_.blocks.size());
        cfg_.blocks.push_back({id, {}, nullptr, false});
        return id;
    }

    void edge(int from, int to, EdgeKind kind) { cfg_.edges.push_back({from, to, kind}); }

    BasicBlock& block(int id) { return cfg_.blocks[static_cast<std::size_t>(id)]; }

    // Returns the block control falls out of, or -1 if control never falls through.
    int list(const StmtList& stmts, int cur) {
        for (const auto& s : stmts) {
            if (cur < 0) {
                break;
            }
            cur = stmt(*s, cur);
        }
        return cur;
    }

    int stmt(const Stmt& s, int cur) {
        switch (s.kind) {
            case StmtKind::Block: return list(s.body, cur);
            case StmtKind::Return:
                block(cur).stmts.push_back(&s);
                returns_.push_back(cur);
                return -1;
            case StmtKind::If: {
                int head = branch_block(cur, s);
                int thenStart = fresh();
                edge(head, thenStart, EdgeKind::TrueBranch);
                int thenEnd = list(s.body, thenStart);
                int elseEnd = head;
                if (s.hasElse) {
                    int elseStart = fresh();
                    edge(head, elseStart, EdgeKind::FalseBranch);
                    elseEnd = list(s.elseBody, elseStart);
                }
                if (thenEnd < 0 && elseEnd < 0) {
                    return -1;
                }
                int join = fresh();
                if (thenEnd >= 0) {
                    edge(thenEnd, join, EdgeKind::Seq);
                }
                if (elseEnd >= 0) {
                    edge(elseEnd, join, s.hasElse ? EdgeKind::Seq : EdgeKind::FalseBranch);
                }
                return join;
            }
            case StmtKind::For:
            case StmtKind::While: {
                if (s.init) {
                    block(cur).stmts.push_back(s.init.get());
                }
                int header = fresh();
                edge(cur, header, EdgeKind::Seq);
                block(header).branch = &s;
                int bodyStart = fresh();
                edge(header, bodyStart, EdgeKind::TrueBranch);
                int bodyEnd = list(s.body, bodyStart);
                if (bodyEnd >= 0) {
                    if (s.update) {
                        block(bodyEnd).stmts.push_back(s.update.get());
                    }
                    edge(bodyEnd, header, EdgeKind::LoopBack);
                }
                int after = fresh();
                edge(header, after, EdgeKind::FalseBranch);
                return after;
            }
            default: block(cur).stmts.push_back(&s); return cur;
        }
    }

    // An if condition terminates the current block.
    int branch_block(int cur, const Stmt& s) {
        block(cur).branch = &s;
        return cur;
    }

    Cfg cfg_;
    std::vector<int> returns_;
};

std::vector<int> reverse_postorder(const Cfg& cfg) {
    std::vector<int> order;
    std::vector<char> seen(cfg.blocks.size(), 0);
    std::vector<std::vector<int>> succ(cfg.blocks.size());
    for (const auto& e : cfg.edges) {
        succ[static_cast<std::size_t>(e.from)].push_back(e.to);
    }
    std::function<void(int)> dfs = [&](int b) {
        seen[static_cast<std::size_t>(b)] = 1;
        for (int s : succ[static_cast<std::size_t>(b)]) {
            if (!seen[static_cast<std::size_t>(s)]) {
                dfs(s);
            }
        }
        order.push_back(b);
    };
    dfs(cfg.entry);
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace

Cfg build_cfg(const frontend::FunctionDecl& fn) { return Builder{}.run(fn); }

std::vector<int> immediate_dominators(const Cfg& cfg) {
    std::vector<int> rpo = reverse_postorder(cfg);
    std::vector<int> index(cfg.blocks.size(), -1);
    for (std::size_t i = 0; i < rpo.size(); ++i) {
        index[static_cast<std::size_t>(rpo[i])] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> preds(cfg.blocks.size());
    for (const auto& e : cfg.edges) {
        preds[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    std::vector<int> idom(cfg.blocks.size(), -1);
    idom[static_cast<std::size_t>(cfg.entry)] = cfg.entry;

    auto intersect = [&](int a, int b) {
        while (a != b) {
            while (index[static_cast<std::size_t>(a)] > index[static_cast<std::size_t>(b)]) {
                a = idom[static_cast<std::size_t>(a)];
            }
            while (index[static_cast<std::size_t>(b)] > index[static_cast<std::size_t>(a)]) {
                b = idom[static_cast<std::size_t>(b)];
            }
        }
        return a;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < rpo.size(); ++i) {
            int b = rpo[i];
            int next = -1;
            for (int p : preds[static_cast<std::size_t>(b)]) {
                if (idom[static_cast<std::size_t>(p)] < 0) {
                    continue;
                }
                next = next < 0 ? p : intersect(p, next);
            }
            if (next >= 0 && idom[static_cast<std::size_t>(b)] != next) {
                idom[static_cast<std::size_t>(b)] = next;
                changed = true;
            }
        }
    }
    return idom;
}

bool dominates(const std::vector<int>& idom, int a, int b) {
    if (idom[static_cast<std::size_t>(b)] < 0) {
        return false;
    }
    while (true) {
        if (a == b) {
            return true;
        }
        int up = idom[static_cast<std::size_t>(b)];
        if (up == b) {
            return false;
        }
        b = up;
    }
}

}  // namespace gasgauge::loopscan
