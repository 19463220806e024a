#include <iostream>
#include "Foo.h"
#include "Printable.h"

class WemTeLabel : public Foo, public Printable {
public:
    void print() { std::cout << label() << ": " << describe() << std::endl; }
};
