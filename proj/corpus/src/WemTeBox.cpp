#include "Shape.h"

class WemTeBox : public Shape {
public:
    WemTeBox(double w, double h) : Shape(), m_dW(w), m_dH(h) {}

    double area() { return m_dW * m_dH; }

private:
    double m_dW;
    double m_dH;
};
