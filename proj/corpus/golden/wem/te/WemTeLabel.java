package wem.te;

import app.Foo;
import app.Printable;

public class WemTeLabel extends Foo implements Printable {
    public void print() {
        System.out.println(new StringBuilder().append(label()).append(": ").append(describe()));
    }
}
