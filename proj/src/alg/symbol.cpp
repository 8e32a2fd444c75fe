#include "fw/alg/symbol.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace fw::alg {

SymbolRegistry& SymbolRegistry::global()
{
    static SymbolRegistry registry;
    return registry;
}

SymbolRegistry::SymbolRegistry()
{
    table_[sym::beta] = {"beta", Parity::even, 0, true};
    table_[sym::O] = {"O", Parity::odd, 1, true};
    table_[sym::F] = {"F", Parity::even, 2, true};
    table_[sym::E] = {"E", Parity::even, 2, true};
    count_.store(4, std::memory_order_release);
}

SymbolId SymbolRegistry::declare(std::string_view name, Parity parity, int weight_vc)
{
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    if (weight_vc < 0) throw std::invalid_argument(fmt::format("symbol '{}' has negative weight", name));
    std::lock_guard lock(mutex_);
    std::size_t n = count_.load(std::memory_order_relaxed);
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[i].name == name) {
            if (table_[i].parity != parity || table_[i].weight_vc != weight_vc)
                throw std::invalid_argument(fmt::format("symbol '{}' already declared with different attributes", name));
            return static_cast<SymbolId>(i);
        }
    }
    if (n == capacity) throw std::length_error("symbol registry is full");
    table_[n] = {std::string(name), parity, weight_vc, true};
    count_.store(n + 1, std::memory_order_release);
    return static_cast<SymbolId>(n);
}

std::optional<SymbolId> SymbolRegistry::find(std::string_view name) const
{
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        if (table_[i].name == name) return static_cast<SymbolId>(i);
    return std::nullopt;
}

const OperatorSymbol& SymbolRegistry::at(SymbolId id) const
{
    if (id >= size()) throw std::out_of_range(fmt::format("unknown symbol id {}", id));
    return table_[id];
}

}  // namespace fw::alg
