package app;

public abstract class Shape {
    protected int m_iId;

    public abstract double area();

    public double twice() {
        return area() * 2;
    }
}
