class Shape {
public:
    virtual double area() = 0;

    double twice() { return area() * 2; }

protected:
    int m_iId;
};
