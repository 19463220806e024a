package wem.te;

import app.Shape;

public class WemTeBox extends Shape {
    private double m_dW;
    private double m_dH;

    public WemTeBox(double w, double h) {
        super();
        m_dW = w;
        m_dH = h;
    }

    public double area() {
        return m_dW * m_dH;
    }
}
