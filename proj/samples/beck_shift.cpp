// Beck graphs of Z_{p^n}: exact lambda next to the shift rule built on Gamma.

#include <zdl/zdl.hpp>

#include <iostream>

int main() {
    using namespace zdl;
    SolverOptions opts;
    opts.max_vertices = 64;
    std::cout << "ring\t|R|\t|Gamma|\tlambda(Gamma)\tshift rule\tlambda(Beck)\n";
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        RingSpec spec({Factor::local(p, n)});
        auto g = gamma(spec);
        auto b = gamma_beck(spec);
        int k = lambda_exact(g.graph, opts).lambda;
        long long rule = lambda_beck_from_gamma(k, static_cast<long long>(spec.order()), static_cast<long long>(g.graph.size()),
                                                diameter(g.graph).value_or(0));
        std::cout << spec.to_string() << '\t' << spec.order() << '\t' << g.graph.size() << '\t' << k << '\t' << rule << '\t'
                  << lambda_exact(b.graph, opts).lambda << '\n';
    }
}
