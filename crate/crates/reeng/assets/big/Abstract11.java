public abstract class Abstract11 extends State {
}
