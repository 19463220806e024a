package app;

public class Foo {
    private int m_iValue;

    public Foo() {
        m_iValue = 7;
    }

    public int getFooValue() {
        return m_iValue;
    }

    public String describe() {
        return "foo";
    }
}
