#include <iostream>

class StreamDemo {
public:
    void greet() {
        std::cout << "Hello" << ',' << 42
            << std::endl;
        std::cout << "Output w/o an endl\n";
    }

    void blank() { std::cout << std::endl; }

    void report(int n, bool ok) {
        std::cerr << "n=" << n << " ok=" << ok << std::endl;
    }
};
