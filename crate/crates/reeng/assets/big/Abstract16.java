public abstract class Abstract16 extends State {
}
